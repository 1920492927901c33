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

#include "gbslxe/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <cmath>
#include <random>
#include <sstream>

#include "gbslxe/distributions.hpp"
#include "gbslxe/hafnian.hpp"
#include "gbslxe/idealscore.hpp"
#include "gbslxe/lxe.hpp"
#include "gbslxe/models.hpp"
#include "gbslxe/permcore.hpp"
#include "gbslxe/rng.hpp"
#include "gbslxe/weingarten.hpp"

namespace gbslxe {

namespace {

class Suite {
   public:
    explicit Suite(const VerifyOptions &options) : options_(options) {}

    void check(const std::string &name, bool ok, const std::string &detail = {}) {
        (ok ? result_.passed : result_.failed)++;
        emit(std::string(ok ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : "  (" + detail + ")"));
    }

    void report(const std::string &name, const std::string &detail) {
        result_.reported++;
        emit("INFO " + name + "  " + detail);
    }

    // Runs body and turns an escaping exception into a failed check.
    template <typename Fn>
    void guarded(const std::string &name, Fn &&body) {
        try {
            body();
        } catch (const std::exception &e) {
            check(name, false, std::string("threw: ") + e.what());
        }
    }

    const VerifyResult &result() const { return result_; }

   private:
    void emit(const std::string &line) {
        if (options_.on_line) {
            options_.on_line(line);
        }
    }

    const VerifyOptions &options_;
    VerifyResult result_;
};

struct ExpectedRow {
    std::vector<int> k;
    std::vector<int> l;
    Rational v;
    long hash_b;
    Rational product;
};

// Published v, #b and v * #b values for 2N = 2, 4, 6.
std::vector<ExpectedRow> published_rows(int half) {
    auto q = [](long n, long d) { return Rational(n, d); };
    switch (half) {
        case 1:
            return {{{1}, {1}, q(1, 4), 4, q(1, 1)}};
        case 2:
            return {{{2, 0}, {2, 0}, q(1, 64), 48, q(3, 4)},
                    {{2, 0}, {0, 1}, q(1, 32), 0, q(0, 1)},
                    {{0, 1}, {2, 0}, q(1, 32), 0, q(0, 1)},
                    {{0, 1}, {0, 1}, q(1, 16), 4, q(1, 4)}};
        case 3:
            return {{{3, 0, 0}, {3, 0, 0}, q(1, 2304), 1344, q(7, 12)},
                    {{3, 0, 0}, {1, 1, 0}, q(1, 384), 0, q(0, 1)},
                    {{3, 0, 0}, {0, 0, 1}, q(1, 288), 0, q(0, 1)},
                    {{1, 1, 0}, {3, 0, 0}, q(1, 384), 0, q(0, 1)},
                    {{1, 1, 0}, {1, 1, 0}, q(1, 64), 16, q(1, 4)},
                    {{1, 1, 0}, {0, 0, 1}, q(1, 48), 0, q(0, 1)},
                    {{0, 0, 1}, {3, 0, 0}, q(1, 288), 0, q(0, 1)},
                    {{0, 0, 1}, {1, 1, 0}, q(1, 48), 0, q(0, 1)},
                    {{0, 0, 1}, {0, 0, 1}, q(1, 36), 6, q(1, 6)}};
        default:
            return {};
    }
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::max(std::abs(a), std::abs(b))); }

CMatrix random_symmetric(int d, Rng &rng) {
    std::normal_distribution<double> normal;
    CMatrix o(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = r; c < d; ++c) {
            o(r, c) = o(c, r) = Complex(normal(rng), normal(rng));
        }
    }
    return o;
}

GbsModel random_general_model(int m, Rng &rng) {
    // Squeezed thermal modes, so that sigma_x sigma_p >= 1 holds.
    std::uniform_real_distribution<double> squeeze(-0.7, 0.7);
    std::uniform_real_distribution<double> nbar(0.0, 1.0);
    std::vector<double> sx(static_cast<std::size_t>(m));
    std::vector<double> sp(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        double s = squeeze(rng);
        double t = 2 * nbar(rng) + 1;
        sx[static_cast<std::size_t>(k)] = std::exp(2 * s) * t;
        sp[static_cast<std::size_t>(k)] = std::exp(-2 * s) * t;
    }
    return build_general_model(sx, sp, haar_unitary(m, rng()));
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(12);
    s << x;
    return s.str();
}

void verify_permcore(Suite &suite) {
    suite.guarded("coset type of the 3-component example", [&] {
        auto rho = Permutation::from_cycles(8, {{1, 2}, {3, 4}, {5, 6, 7, 8}});
        suite.check("coset type of the 3-component example", coset_type(rho).length == 3);
    });
    suite.guarded("coset type (3,2,1,1) example", [&] {
        auto sigma = Permutation::from_cycles(14, {{1, 2}, {3}, {4, 7, 6, 8, 5}, {9, 10, 11, 12, 13, 14}});
        auto ct = coset_type(sigma);
        suite.check("coset type (3,2,1,1) example", ct.eta.parts == std::vector<int>{3, 2, 1, 1} && ct.length == 4);
    });
    suite.guarded("sequence action of (1 2)(3 4)(5 6 7 8)", [&] {
        auto rho = Permutation::from_cycles(8, {{1, 2}, {3, 4}, {5, 6, 7, 8}});
        suite.check("sequence action of (1 2)(3 4)(5 6 7 8)",
                    rho.act({1, 2, 3, 4, 5, 6, 7, 8}) == IndexSequence{2, 1, 4, 3, 6, 7, 8, 5});
    });
    suite.guarded("Omega_k layouts for N = 2", [&] {
        auto a = omega_permutation(ConstrainedComposition({2, 0})).act({1, 2, 3, 4});
        auto b = omega_permutation(ConstrainedComposition({0, 1})).act({1, 2, 3, 4});
        suite.check("Omega_k layouts for N = 2", a == IndexSequence{2, 1, 4, 3} && b == IndexSequence{2, 3, 4, 1});
    });
    suite.guarded("hyperoctahedral counts 2^m m!", [&] {
        bool ok = true;
        for (int m = 1; m <= 3; ++m) {
            std::vector<int> map(static_cast<std::size_t>(2 * m));
            std::iota(map.begin(), map.end(), 0);
            long count = 0;
            do {
                count += coset_type_length(map) == m ? 1 : 0;
            } while (std::next_permutation(map.begin(), map.end()));
            long expect = (1L << m) * static_cast<long>(factorial(static_cast<unsigned>(m)));
            ok = ok && count == expect;
        }
        suite.check("hyperoctahedral counts 2^m m!", ok);
    });
    suite.guarded("R^l coset sums", [&] {
        bool ok = true;
        for (const auto &rho : {Permutation::identity(4), Permutation::from_cycles(4, {{1, 2, 3, 4}}),
                                Permutation::from_cycles(4, {{1, 2}, {3, 4}})}) {
            for (int r = 1; r <= 3; ++r) {
                ok = ok && coset_sum_check(rho, r) == boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(
                                                                                                coset_type(rho).length));
            }
        }
        suite.check("R^l coset sums", ok);
    });
}

void verify_tables(Suite &suite, const VerifyOptions &options) {
    for (int half = 1; half <= 3; ++half) {
        std::string name = "table for 2N = " + std::to_string(2 * half);
        suite.guarded(name, [&] {
            auto table = c_coefficients(half, options.threads);
            auto expected = published_rows(half);
            bool ok = table.rows.size() == expected.size();
            Rational sum = 0;
            bool off_diagonal_zero = true;
            for (std::size_t i = 0; ok && i < expected.size(); ++i) {
                const auto &row = table.rows[i];
                ok = row.k.parts() == expected[i].k && row.l.parts() == expected[i].l && row.v == expected[i].v &&
                     row.hash_b == expected[i].hash_b && row.product == expected[i].product;
                sum += row.product;
                if (!(row.k == row.l) && row.hash_b != 0) {
                    off_diagonal_zero = false;
                }
            }
            suite.check(name + " reproduces v, #b, v*#b exactly", ok);
            suite.check("sum rule for 2N = " + std::to_string(2 * half), sum == 1, "sum = " + to_string(sum));
            suite.check("off-diagonal #b vanish for 2N = " + std::to_string(2 * half), off_diagonal_zero);
            auto nv = ideal_score_novacuum(table);
            suite.check("no-vacuum score for 2N = " + std::to_string(2 * half), nv.equal,
                        to_string(nv.value) + " vs " + to_string(nv.conjectured));
            suite.check("c_2N equals the table sum for 2N = " + std::to_string(2 * half),
                        table.c[static_cast<std::size_t>(2 * half)] == sum);
            if (half == 1) {
                suite.check("c_1 = c_2 = 1", table.c[1] == 1 && table.c[2] == 1);
                suite.check("ideal score 2N = 2, R = 4 is 5/2", ideal_score_exact(table, 4) == Rational(5, 2));
                suite.check("ideal score 2N = 2, R = 2 is 3", ideal_score_exact(table, 2) == Rational(3));
            }
        });
    }
    if (options.deep) {
        suite.guarded("2N = 8 enumeration", [&] {
            auto start = std::chrono::steady_clock::now();
            auto table = c_coefficients(4, options.threads);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            Rational sum = 0;
            int nonzero_off = 0;
            for (const auto &row : table.rows) {
                sum += row.product;
                if (!(row.k == row.l) && row.hash_b != 0) {
                    ++nonzero_off;
                }
            }
            std::string cs;
            for (std::size_t len = 1; len < table.c.size(); ++len) {
                cs += (len > 1 ? ", " : "") + to_string(table.c[len]);
            }
            auto nv = ideal_score_novacuum(table);
            suite.report("2N = 8 coefficients", "c = [" + cs + "]");
            suite.report("2N = 8 sum rule", "sum v*#b = " + to_string(sum) + ", nonzero off-diagonal rows = " +
                                                std::to_string(nonzero_off));
            suite.report("2N = 8 no-vacuum score", to_string(nv.value) + " (closed form " + to_string(nv.conjectured) +
                                                       ", " + (nv.equal ? "equal" : "different") + ")");
            suite.report("2N = 8 runtime", fmt(secs) + " s");
        });
    }
}

void verify_hafnian(Suite &suite, Rng &rng) {
    suite.guarded("hafnian vs matching enumeration", [&] {
        double worst = 0;
        for (int t = 0; t < 20; ++t) {
            int d = 2 + 2 * (t % 5);
            CMatrix o = random_symmetric(d, rng);
            worst = std::max(worst, rel_err(hafnian(o), hafnian_by_matchings(o)));
        }
        suite.check("hafnian vs matching enumeration", worst < 1e-9, "max rel err " + fmt(worst));
    });
    suite.guarded("hafnian diagonal congruence", [&] {
        double worst = 0;
        for (int t = 0; t < 10; ++t) {
            int d = 2 + 2 * (t % 5);
            CMatrix o = random_symmetric(d, rng);
            CVector diag = random_symmetric(d, rng).col(0);
            Complex prod = diag.prod();
            worst = std::max(worst, rel_err(hafnian(diag.asDiagonal() * o * diag.asDiagonal()), prod * hafnian(o)));
        }
        suite.check("hafnian diagonal congruence", worst < 1e-10, "max rel err " + fmt(worst));
    });
    suite.guarded("bipartite hafnian equals permanent", [&] {
        double worst = 0;
        for (int n = 1; n <= 6; ++n) {
            CMatrix g = random_symmetric(n, rng);
            g(0, n - 1) += 0.5;  // break symmetry
            CMatrix b = CMatrix::Zero(2 * n, 2 * n);
            b.topRightCorner(n, n) = g;
            b.bottomLeftCorner(n, n) = g.transpose();
            worst = std::max(worst, rel_err(hafnian(b), permanent(g)));
        }
        suite.check("bipartite hafnian equals permanent", worst < 1e-10, "max rel err " + fmt(worst));
    });
}

void verify_distributions(Suite &suite, Rng &rng) {
    suite.guarded("sector probability series vs pattern sum", [&] {
        double worst = 0;
        for (int t = 0; t < 10; ++t) {
            int m = 1 + t % 4;
            GbsModel model = random_general_model(m, rng);
            for (int n = 0; n <= 4; ++n) {
                double a = total_photon_probability(model, n);
                double b = total_photon_probability_bruteforce(model, n);
                worst = std::max(worst, std::abs(a - b) / std::max(1e-300, std::abs(b)));
            }
        }
        suite.check("sector probability series vs pattern sum", worst < 1e-9, "max rel err " + fmt(worst));
    });
    suite.guarded("squeezed q-series closed form", [&] {
        double worst = 0;
        for (int r_modes = 1; r_modes <= 4; ++r_modes) {
            double r = 0.3 + 0.2 * r_modes;
            GbsModel model = build_squeezed_model(r, r_modes, haar_unitary(4, rng()));
            auto q = q_series(model, 8);
            for (int n = 0; n <= 4; ++n) {
                // binom(R/2 + N - 1, N) for possibly half-integer R/2.
                double binom = 1;
                for (int i = 1; i <= n; ++i) {
                    binom *= (r_modes / 2.0 + i - 1) / i;
                }
                double expect = std::pow(std::tanh(r), 2 * n) * binom;
                worst = std::max(worst, std::abs(q[static_cast<std::size_t>(2 * n)] - expect) / expect);
                if (n < 4) {
                    worst = std::max(worst, std::abs(q[static_cast<std::size_t>(2 * n + 1)]));
                }
            }
        }
        suite.check("squeezed q-series closed form", worst < 1e-10, "max err " + fmt(worst));
    });
    suite.guarded("thermal sectors are uniform", [&] {
        GbsModel model = build_thermal_model(0.7, 3);
        auto patterns = enumerate_patterns(3, 3);
        double first = probability(model, patterns.front());
        double worst = 0;
        for (const auto &p : patterns) {
            worst = std::max(worst, std::abs(probability(model, p) / first - 1));
        }
        suite.check("thermal sectors are uniform", worst < 1e-10, "max rel dev " + fmt(worst));
    });
}

void verify_lxe(Suite &suite, Rng &rng) {
    suite.guarded("uniform reference |K(N)| LXE(thermal, B) = 1", [&] {
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            int m = 2 + t % 3;
            int n = 1 + t % 3;
            GbsModel b = random_general_model(m, rng);
            GbsModel a = build_thermal_model(0.5 + t, m);
            double v = to_double(Rational(count_patterns(m, n))) * lxe_bruteforce(a, b, n);
            worst = std::max(worst, std::abs(v - 1));
        }
        suite.check("uniform reference |K(N)| LXE(thermal, B) = 1", worst < 1e-9, "max dev " + fmt(worst));
    });
    suite.guarded("D coefficient routes agree", [&] {
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            int m = 2 + t % 2;
            GbsModel a = random_general_model(m, rng);
            GbsModel b = random_general_model(m, rng);
            auto d = d_coefficient(a, b, 1 + t % 3);
            worst = std::max(worst, std::abs(d.series - d.ratio) / std::abs(d.ratio));
        }
        suite.check("D coefficient routes agree", worst < 1e-9, "max rel err " + fmt(worst));
    });
}

void verify_phase_integral(Suite &suite, Rng &rng) {
    suite.guarded("phase-integral expansion is the multiset indicator", [&] {
        long mismatches = 0;
        std::vector<IndexSequence> all;
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c)
                    for (int d = 1; d <= 3; ++d) all.push_back({a, b, c, d});
        for (const auto &j : all) {
            auto js = j;
            std::sort(js.begin(), js.end());
            for (const auto &jp : all) {
                auto jps = jp;
                std::sort(jps.begin(), jps.end());
                Rational expect = js == jps ? 1 : 0;
                mismatches += phase_integral_indicator(j, jp) == expect ? 0 : 1;
            }
        }
        suite.check("phase-integral expansion is the multiset indicator", mismatches == 0,
                    std::to_string(all.size() * all.size()) + " pairs, " + std::to_string(mismatches) + " mismatches");
    });
    suite.guarded("reordering identity", [&] {
        std::uniform_int_distribution<int> coef(-9, 9);
        std::map<std::pair<IndexSequence, IndexSequence>, int> values;
        auto h = [&](const IndexSequence &j, const IndexSequence &jp) {
            auto [it, inserted] = values.emplace(std::make_pair(j, jp), 0);
            if (inserted) {
                it->second = coef(rng);
            }
            return Rational(it->second);
        };
        bool ok = true;
        for (int m = 1; m <= 3; ++m) {
            values.clear();
            auto sides = reordering_identity(m, 2, h);
            ok = ok && sides.lhs == sides.rhs;
        }
        suite.check("reordering identity", ok);
    });
}

void verify_weingarten(Suite &suite, Rng &rng) {
    suite.guarded("Weingarten orthogonality", [&] {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            for (int m : {n, n + 3}) {
                std::vector<int> map(static_cast<std::size_t>(n));
                std::iota(map.begin(), map.end(), 0);
                do {
                    auto sigma = Permutation::from_zero_based(map);
                    Rational expect = sigma.is_identity() ? 1 : 0;
                    ok = ok && weingarten_orthogonality_row(sigma, m) == expect;
                } while (std::next_permutation(map.begin(), map.end()));
            }
        }
        suite.check("Weingarten orthogonality", ok);
    });
    suite.guarded("Weingarten n = 2 closed forms", [&] {
        int m = 5;
        Rational e = weingarten(Permutation::identity(2), m);
        Rational t = weingarten(Permutation::from_cycles(2, {{1, 2}}), m);
        suite.check("Weingarten n = 2 closed forms", e == Rational(1, m * m - 1) && t == Rational(-1, m * (m * m - 1)));
    });
    suite.guarded("seeded Monte Carlo E|U_11|^2 at M = 3", [&] {
        auto mc = mc_monomial_average({1}, {1}, {1}, {1}, 3, 20000, rng());
        double z = std::abs(mc.mean.real() - 1.0 / 3) / mc.std_error_real;
        suite.check("seeded Monte Carlo E|U_11|^2 at M = 3", z < 3, "z = " + fmt(z));
    });
}

}  // namespace

VerifyResult run_verify(const VerifyOptions &options) {
    Suite suite(options);
    Rng rng(mix_seed(options.seed, 0x5eed));
    verify_permcore(suite);
    verify_tables(suite, options);
    verify_hafnian(suite, rng);
    verify_distributions(suite, rng);
    verify_lxe(suite, rng);
    verify_phase_integral(suite, rng);
    verify_weingarten(suite, rng);
    suite.guarded("seeded Haar score smoke run", [&] {
        auto rep = mc_haar_score(0.8, 4, 8, 2, 50, options.seed, kDefaultPatternGuard, options.threads);
        suite.check("seeded Haar score smoke run", std::isfinite(rep.value) && std::isfinite(rep.std_error),
                    "M = 8, R = 4, 2 photons: " + fmt(rep.value) + " +- " + fmt(rep.std_error));
    });
    return suite.result();
}

}  // namespace gbslxe
