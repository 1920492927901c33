// Copyright 2026 The gbslxe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GBSLXE_WEINGARTEN_HPP
#define GBSLXE_WEINGARTEN_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "gbslxe/common.hpp"
#include "gbslxe/permcore.hpp"

namespace gbslxe {

/// Cycle lengths sorted in non-increasing order.
IntegerPartition cycle_type(const Permutation &p);

/// Wg_n(.; M) for one (n, M), one exact value per cycle type.
///
/// Obtained by inverting the Gram matrix G(sigma, tau) = M^{#cycles(sigma^-1 tau)}.
/// Because both G and its inverse are class functions, the n! x n! system
/// collapses to one equation per conjugacy class, solved exactly.
class WeingartenTable {
   public:
    WeingartenTable(int n, int m);

    int degree() const { return n_; }
    int dimension() const { return m_; }
    const std::map<std::vector<int>, Rational> &values() const { return values_; }
    Rational operator()(const Permutation &sigma) const;

   private:
    int n_;
    int m_;
    std::map<std::vector<int>, Rational> values_;
};

inline constexpr int kMaxWeingartenDegree = 6;

/// Memoized table; throws if n > 6 or M < n.
std::shared_ptr<const WeingartenTable> weingarten_table(int n, int m);
Rational weingarten(const Permutation &sigma, int m);

/// sum_tau M^{#cycles(sigma^-1 tau)} Wg(tau), which must be [sigma = e].
Rational weingarten_orthogonality_row(const Permutation &sigma, int m);

/// E_U[U_{j1 mu1} ... U_{jn mun} conj(U_{j'1 nu1}) ... conj(U_{j'n nun})]
///   = sum over rho(j) = j', tau(mu) = nu of Wg(rho^-1 tau).
/// Indices are 1-based.
Rational haar_monomial_average(const IndexSequence &j, const IndexSequence &mu, const IndexSequence &jp,
                               const IndexSequence &nu, int m);

struct MonteCarloMoment {
    Complex mean;
    double std_error_real = 0;
    double std_error_imag = 0;
};

/// Sample mean of the same monomial over haar_unitary(M, mix_seed(seed, t)).
/// The barred and unbarred blocks may differ in length here.
MonteCarloMoment mc_monomial_average(const IndexSequence &j, const IndexSequence &mu, const IndexSequence &jp,
                                     const IndexSequence &nu, int m, std::size_t trials, std::uint64_t seed,
                                     unsigned threads = 1);

/// Leading term Moeb(sigma) / M^{n + ||sigma||}.
Rational asymptotic_weingarten_exact(const Permutation &sigma, int m);
double asymptotic_weingarten(const Permutation &sigma, int m);

}  // namespace gbslxe

#endif
