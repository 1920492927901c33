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

#ifndef GBSLXE_IDEALSCORE_HPP
#define GBSLXE_IDEALSCORE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "gbslxe/common.hpp"
#include "gbslxe/permcore.hpp"

namespace gbslxe {

/// Histogram over the coset-type length: entry l counts the matchers rho with
/// rho(g) = h and l(rho) = l. Index 0 is unused.
std::vector<BigInt> count_bl(const IndexSequence &g, const IndexSequence &h);

/// One (k, l) row of the v / #b tables.
struct TableRow {
    ConstrainedComposition k{std::vector<int>{}};
    ConstrainedComposition l{std::vector<int>{}};
    /// prod_a 1 / (k_a! l_a! (2a)^{k_a + l_a})
    Rational v;
    /// #b(k, l) = sum over sigma of b_{2N}
    BigInt hash_b;
    /// v * #b
    Rational product;
    /// sum over sigma of b_l for l = 0..2N (entry 0 unused)
    std::vector<BigInt> b_by_length;
};

/// Exact c_l for l = 1..2N of the half-size N, plus the table rows they came from.
struct CoefficientTable {
    int half_size = 0;
    /// c[l] for l = 0..2N; c[0] is always 0.
    std::vector<Rational> c;
    std::vector<TableRow> rows;
};

Rational composition_weight(const ConstrainedComposition &k, const ConstrainedComposition &l);

/// Default feasibility bound on N for the coefficient enumeration.
inline constexpr int kDefaultMaxHalfSize = 4;

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Enumerates every (k, l, sigma) with sigma in S_{2N} and every matcher of
/// j + sigma(j) onto Omega_k(j) + Omega_l(sigma(j)), j = (1, ..., 2N) distinct.
/// Parallel over sigma; the reduction is exact so the result does not depend on
/// the thread count.
CoefficientTable c_coefficients(int half_size, unsigned threads = 1, const ProgressFn &progress = {},
                                int max_half_size = kDefaultMaxHalfSize);

/// Rough count of graph evaluations c_coefficients(N) will perform.
BigInt c_coefficients_cost(int half_size);

/// 4^N (N!)^2 / (2N)!
Rational score_prefactor(int half_size);

/// Exact value of the ideal score for 2N photons and R squeezed modes.
Rational ideal_score_exact(const CoefficientTable &table, int squeezed_modes);
double ideal_score(const CoefficientTable &table, int squeezed_modes);
double ideal_score(int half_size, int squeezed_modes, unsigned threads = 1);

struct NoVacuumScore {
    Rational value;
    Rational conjectured;
    bool equal = false;
};
NoVacuumScore ideal_score_novacuum(const CoefficientTable &table);
NoVacuumScore ideal_score_novacuum(int half_size, unsigned threads = 1);

std::vector<TableRow> table_report(int half_size, unsigned threads = 1);

/// F(h, g) = sum over sigma in S_m of prod_a delta(h_a, sigma(g)_a), by the
/// literal loop over S_m (m <= 8).
BigInt f_delta(const IndexSequence &h, const IndexSequence &g);

/// I(j, j') evaluated term by term from the set-partition expansion, with the
/// first element of each block as its representative.
Rational phase_integral_indicator(const IndexSequence &j, const IndexSequence &jp);

/// Both sides of the re-summation identity for a test function h of two
/// index sequences of length n with values in {1..M}:
///   lhs = sum_{j, j'} h(j, j') I(j, j')
///   rhs = sum_Lambda sum_{distinct reps} sum_sigma h(j_Lambda, sigma(j_Lambda)) / Lambda!
struct ReorderingSides {
    Rational lhs;
    Rational rhs;
};
using TestFunction = std::function<Rational(const IndexSequence &, const IndexSequence &)>;
ReorderingSides reordering_identity(int m, int n, const TestFunction &h);

/// Brute-force count of (mu, nu) in [R]^{2N} x [R]^{2N} with nu-bar = rho(mu-bar),
/// where mu-bar = (mu_1, mu_1, ..., mu_2N, mu_2N). Throws unless R <= 4, N <= 2.
BigInt coset_sum_check(const Permutation &rho, int r);

}  // namespace gbslxe

#endif
