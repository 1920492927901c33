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

#include "gbslxe/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gbslxe/parallel.hpp"
#include "gbslxe/permcore.hpp"
#include "gbslxe/rng.hpp"

namespace gbslxe {

namespace {

void require_valid(const GbsModel &model) {
    if (model.a.rows() != 2 * model.modes || model.a.cols() != 2 * model.modes || model.modes < 1) {
        fail("malformed model");
    }
    auto report = validity_check(model);
    if (!report.valid) {
        fail("invalid model: ||G||_2 = " + std::to_string(report.g_norm) + " is not below 1");
    }
}

double inverse_factorial_product(const DetectionPattern &n) {
    double f = 1;
    for (int c : n) {
        for (int k = 2; k <= c; ++k) {
            f *= k;
        }
    }
    return 1.0 / f;
}

bool is_pure_squeezed(const GbsModel &model) {
    return model.kind == ModelKind::Squeezed;
}

}  // namespace

double vacuum_probability(const GbsModel &model) {
    require_valid(model);
    const Eigen::Index d = model.a.rows();
    CMatrix b = CMatrix::Identity(d, d) - x_matrix(model.modes) * model.a;
    Complex det = b.partialPivLu().determinant();
    return std::sqrt(std::max(0.0, det.real()));
}

double probability(const GbsModel &model, const DetectionPattern &n, ClipCounter *clips, unsigned threads) {
    return probability_given_vacuum(model, vacuum_probability(model), n, clips, threads);
}

double probability_given_vacuum(const GbsModel &model, double pr0, const DetectionPattern &n, ClipCounter *clips,
                                unsigned threads) {
    if (static_cast<int>(n.size()) != model.modes) {
        fail("pattern length does not match the number of modes");
    }
    const int total = total_photons(n);
    if (total == 0) {
        return pr0;
    }
    double haf;
    if (is_pure_squeezed(model)) {
        if (total % 2 != 0) {
            return 0.0;
        }
        CMatrix v = model.a.topLeftCorner(model.modes, model.modes);
        haf = std::norm(hafnian(reduce_half(v, n), threads));
    } else {
        haf = hafnian(reduce_matrix(model.a, n), threads).real();
    }
    double p = pr0 * haf * inverse_factorial_product(n);
    if (p < 0) {
        if (p < -Tolerances::negative_probability) {
            fail_numeric("probability is negative beyond rounding (" + std::to_string(p) + ")");
        }
        if (clips != nullptr) {
            ++clips->clipped;
        }
        p = 0;
    }
    return p;
}

BigInt count_patterns(int m, int n) {
    if (m < 1 || n < 0) {
        fail("pattern counting needs M >= 1 and N >= 0");
    }
    return binomial(static_cast<unsigned>(m + n - 1), static_cast<unsigned>(n));
}

void check_pattern_guard(int m, int n, std::uint64_t guard) {
    BigInt size = count_patterns(m, n);
    if (size > guard) {
        fail_guard("|K(N)| = " + size.str() + " exceeds the pattern guard " + std::to_string(guard));
    }
}

void for_each_pattern(int m, int n, const std::function<void(const DetectionPattern &)> &fn) {
    if (m < 1 || n < 0) {
        fail("pattern enumeration needs M >= 1 and N >= 0");
    }
    DetectionPattern p(static_cast<std::size_t>(m), 0);
    p.back() = n;
    while (true) {
        fn(p);
        // Successor in lexicographic order among vectors summing to n: find the
        // rightmost position i < m-1 that can grow, i.e. with something to its
        // right, bump it and put the remainder at the end.
        int i = m - 2;
        while (i >= 0) {
            int right = 0;
            for (int j = i + 1; j < m; ++j) {
                right += p[static_cast<std::size_t>(j)];
            }
            if (right > 0) {
                ++p[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < m; ++j) {
                    p[static_cast<std::size_t>(j)] = 0;
                }
                p.back() = right - 1;
                break;
            }
            --i;
        }
        if (i < 0) {
            return;
        }
    }
}

std::vector<DetectionPattern> enumerate_patterns(int m, int n) {
    std::vector<DetectionPattern> out;
    for_each_pattern(m, n, [&](const DetectionPattern &p) { out.push_back(p); });
    return out;
}

double cycle_index(const std::vector<double> &y, int n) {
    if (n < 0 || static_cast<int>(y.size()) < n) {
        fail("cycle index needs y_1..y_n");
    }
    double total = 0;
    for (const auto &k : constrained_compositions(n)) {
        double term = 1;
        for (int a = 1; a <= n; ++a) {
            int ka = k.part(a);
            for (int t = 1; t <= ka; ++t) {
                term *= y[static_cast<std::size_t>(a - 1)] / (static_cast<double>(a) * t);
            }
        }
        total += term;
    }
    return total;
}

std::vector<double> trace_powers(const GbsModel &model, int lmax) {
    CMatrix xa = x_matrix(model.modes) * model.a;
    std::vector<double> y;
    CMatrix power = xa;
    for (int l = 1; l <= lmax; ++l) {
        y.push_back(0.5 * power.trace().real());
        if (l < lmax) {
            power = (power * xa).eval();
        }
    }
    return y;
}

std::vector<double> q_series(const GbsModel &model, int nmax) {
    require_valid(model);
    if (nmax < 0) {
        fail("nmax must be non-negative");
    }
    std::vector<double> y = trace_powers(model, nmax);
    std::vector<double> q(static_cast<std::size_t>(nmax + 1), 0.0);
    q[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        double s = 0;
        for (int l = 1; l <= n; ++l) {
            s += y[static_cast<std::size_t>(l - 1)] * q[static_cast<std::size_t>(n - l)];
        }
        q[static_cast<std::size_t>(n)] = s / n;
    }
    return q;
}

double total_photon_probability(const GbsModel &model, int n) {
    if (n < 0) {
        fail("photon number must be non-negative");
    }
    auto q = q_series(model, n);
    return vacuum_probability(model) * q[static_cast<std::size_t>(n)];
}

double total_photon_probability_bruteforce(const GbsModel &model, int n, std::uint64_t guard, unsigned threads) {
    check_pattern_guard(model.modes, n, guard);
    auto patterns = enumerate_patterns(model.modes, n);
    std::vector<double> probs(patterns.size());
    const double pr0 = vacuum_probability(model);
    parallel_for(patterns.size(), threads,
                 [&](std::size_t i) { probs[i] = probability_given_vacuum(model, pr0, patterns[i]); });
    double total = 0;
    for (double p : probs) {
        total += p;
    }
    return total;
}

std::map<int, std::vector<std::size_t>> SampleSet::sector_index() const {
    std::map<int, std::vector<std::size_t>> index;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        index[total_photons(samples[i])].push_back(i);
    }
    return index;
}

void SampleSet::validate() const {
    if (modes < 1) {
        fail("sample set needs M >= 1");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (static_cast<int>(samples[i].size()) != modes) {
            fail("sample " + std::to_string(i) + " has length " + std::to_string(samples[i].size()) +
                 ", expected " + std::to_string(modes));
        }
        total_photons(samples[i]);
    }
}

SampleSet sample_bruteforce(const GbsModel &model, int n, std::size_t count, std::uint64_t seed,
                            std::uint64_t guard) {
    check_pattern_guard(model.modes, n, guard);
    SampleSet set;
    set.modes = model.modes;
    set.meta["generator"] = "bruteforce";
    set.meta["model"] = to_string(model.kind);
    set.meta["sector"] = std::to_string(n);
    set.meta["seed"] = std::to_string(seed);
    auto patterns = enumerate_patterns(model.modes, n);
    std::vector<double> cumulative(patterns.size());
    const double pr0 = vacuum_probability(model);
    double running = 0;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        running += probability_given_vacuum(model, pr0, patterns[i]);
        cumulative[i] = running;
    }
    if (!(running > 1e-300)) {
        fail("sector " + std::to_string(n) + " has zero probability under this model");
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, running);
    set.samples.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        double u = uniform(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), patterns.size() - 1);
        set.samples.push_back(patterns[idx]);
    }
    return set;
}

}  // namespace gbslxe
