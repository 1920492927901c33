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

#ifndef GBSLXE_LXE_HPP
#define GBSLXE_LXE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gbslxe/distributions.hpp"
#include "gbslxe/models.hpp"

namespace gbslxe {

enum class ScoreMethod { BruteForce, Samples, MonteCarlo, ClosedForm };
const char *to_string(ScoreMethod method);

struct ScoreReport {
    int sector = 0;
    double value = 0;
    /// 0 for closed-form values; +inf when a sample estimate has no spread.
    double std_error = 0;
    ScoreMethod method = ScoreMethod::ClosedForm;
    /// FNV-1a over the canonical description of the inputs.
    std::string digest;
    std::string version = kVersion;
    std::vector<std::uint64_t> seeds;
    std::map<std::string, std::string> meta;
};

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string &data);

/// LXE(A, B; N) = sum over K(N) of Pr(n|A) Pr(n|B) / (Pr(N|A) Pr(N|B)).
/// Sector probabilities come from the q-series. Symmetric in A and B bit for bit.
double lxe_bruteforce(const GbsModel &a, const GbsModel &b, int n, std::uint64_t guard = kDefaultPatternGuard,
                      unsigned threads = 1);

/// Both routes to Dbar = (N!)^2 D(A, B; N).
struct DCoefficient {
    /// 1 / (q_N(A) q_N(B)).
    double series = 0;
    /// Pr(0|A) Pr(0|B) / (Pr(N|A) Pr(N|B)) with Pr(N) summed over K(N).
    double ratio = 0;
};
DCoefficient d_coefficient(const GbsModel &a, const GbsModel &b, int n, std::uint64_t guard = kDefaultPatternGuard,
                           unsigned threads = 1);

/// Sample estimate of s(A_sqz; N) from a multi-sector sample file. P^r(N) is
/// the sector's share of all samples in the file.
ScoreReport score_from_samples(const SampleSet &samples, const UnitaryMatrix &u, double r, int squeezed_modes, int n,
                               unsigned threads = 1);

/// Mean and standard error over Haar draws of |K(N)| LXE(A_sqz(U), A_sqz(U); N).
/// Trial t uses haar_unitary(M, mix_seed(seed, t)).
ScoreReport mc_haar_score(double r, int squeezed_modes, int m, int n, std::size_t trials, std::uint64_t seed,
                          std::uint64_t guard = kDefaultPatternGuard, unsigned threads = 1);

/// u_k = tr[(D^2 V D^2 V*)^k] / 2 for k = 1..N with D = diag(exp(i phi)),
/// V = U zeta U^T. R = 0 is allowed and gives zeros.
std::vector<Complex> u_traces(const UnitaryMatrix &u, int squeezed_modes, const std::vector<double> &phi, int n);

}  // namespace gbslxe

#endif
