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

#include <random>

#include "gbslxe/idealscore.hpp"
#include "oracles.hpp"

using namespace gbslxe;

namespace {

Rational q(long a, long b) { return Rational(a, b); }

std::vector<double> as_double(const std::vector<Rational> &c) {
    std::vector<double> out;
    for (const auto &x : c) {
        out.push_back(to_double(x));
    }
    return out;
}

}  // namespace

TEST(count_bl, two_photon_example) {
    auto hist = count_bl({1, 2, 1, 2}, {2, 1, 2, 1});
    ASSERT_EQ(hist.size(), 3u);
    EXPECT_EQ(hist[1], BigInt(2));
    EXPECT_EQ(hist[2], BigInt(2));
    for (const auto &x : count_bl({1, 1}, {1, 2})) {
        EXPECT_EQ(x, BigInt(0));
    }
}

TEST(count_bl, histogram_totals_and_oracle) {
    IndexSequence g{1, 2, 3, 4, 2, 1, 4, 3};
    IndexSequence h{2, 1, 4, 3, 1, 4, 3, 2};
    auto hist = count_bl(g, h);
    BigInt total = 0;
    for (const auto &x : hist) {
        total += x;
    }
    EXPECT_EQ(total, BigInt(16));
    std::vector<BigInt> expected(hist.size(), 0);
    for (const auto &rho : oracle::matchers_by_filter(g, h)) {
        expected[static_cast<std::size_t>(oracle::pairing_components(rho))] += 1;
    }
    EXPECT_EQ(hist, expected);
}

TEST(c_coefficients, agree_with_direct_enumeration) {
    for (int n = 1; n <= 2; ++n) {
        auto table = c_coefficients(n);
        EXPECT_EQ(table.c, oracle::c_coefficients(n)) << "N = " << n;
    }
    EXPECT_EQ(c_coefficients(1).c, (std::vector<Rational>{0, 1, 1}));
}

TEST(c_coefficients, values_are_thread_independent) {
    auto one = c_coefficients(3, 1);
    auto three = c_coefficients(3, 3);
    EXPECT_EQ(one.c, three.c);
    ASSERT_EQ(one.rows.size(), three.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        EXPECT_EQ(one.rows[i].hash_b, three.rows[i].hash_b);
    }
}

TEST(c_coefficients, top_coefficient_is_row_sum) {
    for (int n = 1; n <= 3; ++n) {
        auto table = c_coefficients(n);
        Rational sum = 0;
        for (const auto &row : table.rows) {
            EXPECT_EQ(row.product, row.v * Rational(row.hash_b));
            EXPECT_EQ(row.v, composition_weight(row.k, row.l));
            sum += row.product;
        }
        EXPECT_EQ(table.c[static_cast<std::size_t>(2 * n)], sum);
        EXPECT_EQ(sum, Rational(1));
        for (const auto &x : table.c) {
            EXPECT_GE(x, 0);
        }
    }
}

TEST(c_coefficients, guard_reports_cost) {
    EXPECT_THROW(c_coefficients(4, 1, {}, 3), Error);
    try {
        c_coefficients(5);
        FAIL() << "expected a guard error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ResourceGuard);
        EXPECT_NE(std::string(e.what()).find("evaluations"), std::string::npos);
    }
}

TEST(tables, published_rows) {
    auto t1 = table_report(1);
    ASSERT_EQ(t1.size(), 1u);
    EXPECT_EQ(t1[0].v, q(1, 4));
    EXPECT_EQ(t1[0].hash_b, BigInt(4));
    EXPECT_EQ(t1[0].product, Rational(1));

    for (const auto &row : table_report(2)) {
        if (row.k == row.l && row.k.parts() == std::vector<int>{2, 0}) {
            EXPECT_EQ(row.v, q(1, 64));
            EXPECT_EQ(row.hash_b, BigInt(48));
            EXPECT_EQ(row.product, q(3, 4));
        } else if (row.k == row.l) {
            EXPECT_EQ(row.v, q(1, 16));
            EXPECT_EQ(row.hash_b, BigInt(4));
            EXPECT_EQ(row.product, q(1, 4));
        } else {
            EXPECT_EQ(row.hash_b, BigInt(0));
        }
    }
}

TEST(ideal_score, closed_forms) {
    auto t1 = c_coefficients(1);
    EXPECT_EQ(ideal_score_exact(t1, 4), q(5, 2));
    EXPECT_EQ(ideal_score_exact(t1, 2), Rational(3));
    for (int big_r = 1; big_r <= 12; ++big_r) {
        EXPECT_EQ(ideal_score_exact(t1, big_r), Rational(2) * (Rational(1) + q(1, big_r)));
    }
    EXPECT_THROW(ideal_score_exact(t1, 0), Error);
    for (int n = 1; n <= 3; ++n) {
        auto table = c_coefficients(n);
        for (int big_r : {1, 2, 3, 7, 20}) {
            double expected = oracle::ideal_score(as_double(table.c), n, big_r);
            EXPECT_NEAR(ideal_score(table, big_r), expected, 1e-12 * expected);
        }
        // Large R approaches the no-vacuum value from above.
        EXPECT_GT(ideal_score(table, 1000), to_double(ideal_score_novacuum(table).value));
        EXPECT_NEAR(ideal_score(table, 1000000), to_double(ideal_score_novacuum(table).value), 1e-4);
    }
}

TEST(ideal_score, no_vacuum_limit) {
    const Rational expected[] = {0, 2, q(8, 3), q(16, 5)};
    for (int n = 1; n <= 3; ++n) {
        auto nv = ideal_score_novacuum(n);
        EXPECT_EQ(nv.value, expected[n]);
        EXPECT_EQ(nv.conjectured, expected[n]);
        EXPECT_TRUE(nv.equal);
        EXPECT_EQ(score_prefactor(n), expected[n]);
    }
}

TEST(f_delta, small_cases) {
    EXPECT_EQ(f_delta({1, 2}, {1, 2}), BigInt(1));
    EXPECT_EQ(f_delta({1, 1}, {1, 1}), BigInt(2));
    EXPECT_EQ(f_delta({2, 1, 1}, {1, 1, 2}), BigInt(2));
    EXPECT_EQ(f_delta({1, 2}, {1, 3}), BigInt(0));
}

TEST(phase_integral, expansion_equals_multiset_indicator) {
    EXPECT_EQ(phase_integral_indicator({1, 2}, {2, 1}), Rational(1));
    EXPECT_EQ(phase_integral_indicator({1, 1}, {1, 2}), Rational(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> val(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        IndexSequence j(5);
        IndexSequence jp(5);
        for (int i = 0; i < 5; ++i) {
            j[static_cast<std::size_t>(i)] = val(rng);
            jp[static_cast<std::size_t>(i)] = val(rng);
        }
        if (trial % 3 == 0) {
            jp = j;
            std::shuffle(jp.begin(), jp.end(), rng);
        }
        EXPECT_EQ(phase_integral_indicator(j, jp), Rational(oracle::multiset_equal(j, jp)));
    }
}

TEST(phase_integral, reordering_identity_with_random_weights) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-20, 20);
    std::map<std::pair<IndexSequence, IndexSequence>, Rational> table;
    TestFunction h = [&](const IndexSequence &a, const IndexSequence &b) {
        auto key = std::make_pair(a, b);
        auto it = table.find(key);
        if (it == table.end()) {
            it = table.emplace(key, Rational(num(rng), 1 + std::abs(num(rng)))).first;
        }
        return it->second;
    };
    for (int m = 1; m <= 3; ++m) {
        for (int len = 1; len <= 3; ++len) {
            auto sides = reordering_identity(m, len, h);
            EXPECT_EQ(sides.lhs, sides.rhs) << "M = " << m << ", length " << len;
        }
    }
    EXPECT_THROW(reordering_identity(5, 2, h), Error);
}

TEST(coset_sum, counts_are_powers_of_r) {
    EXPECT_EQ(coset_sum_check(Permutation::identity(4), 2), BigInt(4));
    EXPECT_EQ(coset_sum_check(Permutation::from_cycles(4, {{1, 2, 3, 4}}), 2), BigInt(2));
    EXPECT_EQ(coset_sum_check(Permutation::from_cycles(4, {{1, 2}, {3, 4}}), 3), BigInt(9));
    oracle::for_each_permutation(4, [](const std::vector<int> &p) {
        auto rho = Permutation::from_zero_based(p);
        for (int r = 1; r <= 3; ++r) {
            EXPECT_EQ(coset_sum_check(rho, r), boost::multiprecision::pow(BigInt(r), coset_type(rho).length));
        }
    });
}
