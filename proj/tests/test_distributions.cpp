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
#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "gbslxe/distributions.hpp"
#include "gbslxe/rng.hpp"
#include "oracles.hpp"

using namespace gbslxe;

namespace {

GbsModel random_general_model(int m, std::uint64_t seed) {
    // Squeezed thermal modes: variances e^{+-2s} (2 nbar + 1) respect sx sp >= 1.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> squeeze(-0.6, 0.6);
    std::uniform_real_distribution<double> nbar(0.0, 0.8);
    std::vector<double> sx(static_cast<std::size_t>(m));
    std::vector<double> sp(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        double s = squeeze(rng);
        double t = 2 * nbar(rng) + 1;
        sx[static_cast<std::size_t>(k)] = std::exp(2 * s) * t;
        sp[static_cast<std::size_t>(k)] = std::exp(-2 * s) * t;
    }
    return build_general_model(sx, sp, haar_unitary(m, seed + 100));
}

}  // namespace

TEST(patterns, counts_and_order) {
    EXPECT_EQ(count_patterns(2, 3), BigInt(4));
    EXPECT_EQ(count_patterns(2, 2), BigInt(3));
    EXPECT_EQ(count_patterns(100, 4), BigInt(4421275));
    EXPECT_EQ(count_patterns(7, 0), BigInt(1));
    EXPECT_EQ(enumerate_patterns(1, 5), (std::vector<DetectionPattern>{{5}}));
    EXPECT_EQ(enumerate_patterns(4, 2).size(), 10u);
    for (int m = 1; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            EXPECT_EQ(enumerate_patterns(m, n), oracle::patterns(m, n));
        }
    }
    EXPECT_THROW(check_pattern_guard(100, 4, 1000000), Error);
    EXPECT_NO_THROW(check_pattern_guard(100, 4, 5000000));
}

TEST(probability, matches_oracle_for_all_model_kinds) {
    std::vector<GbsModel> models{build_squeezed_model(0.7, 2, haar_unitary(3, 1)), build_thermal_model(0.6, 3),
                                 random_general_model(3, 4)};
    for (const auto &model : models) {
        for (int n = 0; n <= 4; ++n) {
            for (const auto &p : enumerate_patterns(3, n)) {
                double expected = oracle::probability(model.a, p);
                EXPECT_NEAR(probability(model, p), expected, 1e-12 + 1e-10 * expected) << to_string(model.kind);
            }
        }
    }
}

TEST(probability, vacuum_and_parity) {
    auto model = build_squeezed_model(0.5, 2, haar_unitary(3, 2));
    EXPECT_NEAR(probability(model, {0, 0, 0}), vacuum_probability(model), 1e-15);
    // Two single-mode squeezers: Pr(0) = sech^2 r.
    EXPECT_NEAR(vacuum_probability(model), 1.0 / std::pow(std::cosh(0.5), 2), 1e-12);
    for (const auto &p : enumerate_patterns(3, 3)) {
        EXPECT_LT(std::abs(probability(model, p)), 1e-12);
    }
    EXPECT_THROW(probability(model, {1, 1}), Error);
}

TEST(probability, thermal_is_uniform_in_each_sector) {
    auto model = build_thermal_model(1.3, 3);
    for (int n = 1; n <= 4; ++n) {
        auto pats = enumerate_patterns(3, n);
        double first = probability(model, pats.front());
        for (const auto &p : pats) {
            EXPECT_NEAR(probability(model, p) / first, 1.0, 1e-10);
        }
    }
}

TEST(cycle_index, low_orders) {
    std::vector<double> y{1.3, -0.4, 2.1};  // y[a - 1] = y_a
    EXPECT_NEAR(cycle_index(y, 1), 1.3, 1e-15);
    EXPECT_NEAR(cycle_index(y, 2), 1.3 * 1.3 / 2 - 0.4 / 2, 1e-15);
    EXPECT_NEAR(cycle_index(y, 3), std::pow(1.3, 3) / 6 + 1.3 * -0.4 / 2 + 2.1 / 3, 1e-14);
}

TEST(q_series, closed_forms) {
    const double r = 0.45;
    const int big_r = 3;
    auto sq = build_squeezed_model(r, big_r, haar_unitary(4, 6));
    auto q = q_series(sq, 8);
    for (int n = 0; n <= 8; ++n) {
        if (n % 2 == 1) {
            EXPECT_LT(std::abs(q[static_cast<std::size_t>(n)]), 1e-12);
        } else {
            double expected = oracle::squeezed_sector(r, big_r, n / 2) * std::pow(std::cosh(r), big_r);
            EXPECT_NEAR(q[static_cast<std::size_t>(n)], expected, 1e-12);
        }
    }
    const double nbar = 0.9;
    const double t = nbar / (nbar + 1);
    auto th = q_series(build_thermal_model(nbar, 3), 5);
    for (int n = 0; n <= 5; ++n) {
        double binom = std::tgamma(n + 3.0) / (std::tgamma(n + 1.0) * 2.0);
        EXPECT_NEAR(th[static_cast<std::size_t>(n)], std::pow(t, n) * binom, 1e-12);
    }
    auto zero = q_series(build_thermal_model(0.0, 2), 3);
    EXPECT_EQ(zero, (std::vector<double>{1, 0, 0, 0}));
}

TEST(total_photon_probability, series_matches_pattern_sum) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto model = random_general_model(3, seed);
        for (int n = 0; n <= 4; ++n) {
            double expected = oracle::sector_probability(model.a, 3, n);
            EXPECT_NEAR(total_photon_probability(model, n), expected, 1e-9 * expected + 1e-15);
            EXPECT_NEAR(total_photon_probability_bruteforce(model, n), expected, 1e-9 * expected + 1e-15);
        }
    }
    auto sq = build_squeezed_model(0.6, 3, haar_unitary(3, 1));
    EXPECT_NEAR(total_photon_probability(sq, 2), oracle::sector_probability(sq.a, 3, 2), 1e-12);
    EXPECT_LT(std::abs(total_photon_probability(sq, 3)), 1e-12);
    EXPECT_NEAR(total_photon_probability(sq, 0), vacuum_probability(sq), 1e-15);
}

TEST(sampler, thermal_frequencies_are_uniform) {
    auto model = build_thermal_model(0.7, 3);
    const std::size_t draws = 100000;
    auto set = sample_bruteforce(model, 2, draws, 99);
    ASSERT_EQ(set.samples.size(), draws);
    std::map<DetectionPattern, int> counts;
    for (const auto &s : set.samples) {
        ++counts[s];
    }
    ASSERT_EQ(counts.size(), 6u);
    const double p = 1.0 / 6.0;
    const double sd = std::sqrt(draws * p * (1 - p));
    for (const auto &[pattern, c] : counts) {
        EXPECT_LT(std::abs(c - draws * p), 3 * sd);
    }
}

TEST(sampler, squeezed_total_variation) {
    auto model = build_squeezed_model(0.8, 2, haar_unitary(2, 12));
    const std::size_t draws = 100000;
    auto set = sample_bruteforce(model, 2, draws, 5);
    std::map<DetectionPattern, double> freq;
    for (const auto &s : set.samples) {
        freq[s] += 1.0 / draws;
    }
    double sector = oracle::sector_probability(model.a, 2, 2);
    double tv = 0;
    for (const auto &p : oracle::patterns(2, 2)) {
        tv += std::abs(freq[p] - oracle::probability(model.a, p) / sector);
    }
    EXPECT_LT(tv / 2, 0.01);
}

TEST(sampler, edge_cases) {
    auto model = build_thermal_model(0.7, 2);
    EXPECT_TRUE(sample_bruteforce(model, 2, 0, 1).samples.empty());
    auto a = sample_bruteforce(model, 3, 50, 8);
    auto b = sample_bruteforce(model, 3, 50, 8);
    EXPECT_EQ(a.samples, b.samples);
    auto sq = build_squeezed_model(0.5, 2, haar_unitary(2, 1));
    EXPECT_THROW(sample_bruteforce(sq, 3, 10, 1), Error);
    EXPECT_THROW(sample_bruteforce(model, 30, 10, 1, 5), Error);
}

TEST(sample_set, validation_and_sector_index) {
    SampleSet set;
    set.modes = 2;
    set.samples = {{1, 1}, {2, 0}, {0, 1}};
    auto idx = set.sector_index();
    EXPECT_EQ(idx[2], (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(idx[1], (std::vector<std::size_t>{2}));
    EXPECT_NO_THROW(set.validate());
    set.samples.push_back({1});
    EXPECT_THROW(set.validate(), Error);
    set.samples.back() = {-1, 2};
    EXPECT_THROW(set.validate(), Error);
}
