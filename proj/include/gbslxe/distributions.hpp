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

#ifndef GBSLXE_DISTRIBUTIONS_HPP
#define GBSLXE_DISTRIBUTIONS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbslxe/common.hpp"
#include "gbslxe/hafnian.hpp"
#include "gbslxe/models.hpp"

namespace gbslxe {

/// Counts probabilities that came out slightly negative and were clipped to 0.
struct ClipCounter {
    std::uint64_t clipped = 0;
};

/// sqrt det(I - X A).
double vacuum_probability(const GbsModel &model);

/// Pr(n|A) = Pr(0|A) haf(A_n) / n!. Squeezed models use haf(A_n) = |haf(V_n)|^2.
/// Values in [-1e-12, 0) are clipped to 0 and counted; anything more negative
/// is a numeric error.
double probability(const GbsModel &model, const DetectionPattern &n, ClipCounter *clips = nullptr,
                   unsigned threads = 1);

/// Same as probability() with Pr(0|A) supplied by the caller, for loops over
/// many patterns of one model.
double probability_given_vacuum(const GbsModel &model, double pr0, const DetectionPattern &n,
                                ClipCounter *clips = nullptr, unsigned threads = 1);

/// |K(N)| = binom(M+N-1, N).
BigInt count_patterns(int m, int n);

/// Visits the weak M-compositions of N in ascending lexicographic order.
void for_each_pattern(int m, int n, const std::function<void(const DetectionPattern &)> &fn);
std::vector<DetectionPattern> enumerate_patterns(int m, int n);

/// Z_n(y) summed literally over the constrained compositions of n. y[a-1] = y_a.
double cycle_index(const std::vector<double> &y, int n);

/// y_l = tr[(X A)^l] / 2 for l = 1..lmax, by repeated multiplication.
std::vector<double> trace_powers(const GbsModel &model, int lmax);

/// Coefficients q_0..q_nmax of q(alpha, 0, A) = exp(sum_l y_l alpha^l / l),
/// from n q_n = sum_{l=1}^n y_l q_{n-l}.
std::vector<double> q_series(const GbsModel &model, int nmax);

/// Pr(N|A) = Pr(0|A) q_N.
double total_photon_probability(const GbsModel &model, int n);

/// Reference route: sum of probability() over K(N).
double total_photon_probability_bruteforce(const GbsModel &model, int n, std::uint64_t guard = kDefaultPatternGuard,
                                           unsigned threads = 1);

/// Patterns plus provenance. The sector index is derived, not stored.
struct SampleSet {
    int modes = 0;
    std::vector<DetectionPattern> samples;
    std::optional<std::string> unitary_ref;
    std::map<std::string, std::string> meta;

    std::map<int, std::vector<std::size_t>> sector_index() const;
    void validate() const;
};

inline constexpr std::uint64_t kSamplerTableGuard = 10000000;

/// I.i.d. draws from Pr(n|A)/Pr(N|A), tabulated over K(N).
SampleSet sample_bruteforce(const GbsModel &model, int n, std::size_t count, std::uint64_t seed,
                            std::uint64_t guard = kSamplerTableGuard);

/// Throws ResourceGuard if |K(N)| exceeds guard.
void check_pattern_guard(int m, int n, std::uint64_t guard);

}  // namespace gbslxe

#endif
