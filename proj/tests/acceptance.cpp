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
// Acceptance suite: one PASS or FAIL line per numbered criterion, followed by
// indented detail lines. Exit status is non-zero when any criterion fails.
//
//   gbslxe_acceptance [--deep] [--only N] [--skip N]... [--finite-m-trend]
//
// Criterion 3 is judged literally by default. --finite-m-trend judges it by the
// finite-M Haar trend checks instead; the literal reading is known to fail.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gbslxe/distributions.hpp"
#include "gbslxe/hafnian.hpp"
#include "gbslxe/idealscore.hpp"
#include "gbslxe/lxe.hpp"
#include "gbslxe/models.hpp"
#include "gbslxe/rng.hpp"
#include "gbslxe/weingarten.hpp"
#include "oracles.hpp"

using namespace gbslxe;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            details.push_back("failed: " + what);
        }
    }
    void note(const std::string &what) { details.push_back(what); }
};

std::string fmt(const char *f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

std::string str(const Rational &q) { return to_string(q); }

Rational q(long a, long b) { return Rational(a, b); }

bool deep_mode = false;
bool finite_m_trend_mode = false;

// ---------------------------------------------------------------------------

struct PublishedRow {
    std::vector<int> k;
    std::vector<int> l;
    Rational v;
    long hash_b;
    Rational product;
};

std::vector<PublishedRow> published(int half) {
    switch (half) {
        case 1:
            return {{{1}, {1}, q(1, 4), 4, q(1, 1)}};
        case 2:
            return {{{2, 0}, {2, 0}, q(1, 64), 48, q(3, 4)},
                    {{2, 0}, {0, 1}, q(1, 32), 0, 0},
                    {{0, 1}, {2, 0}, q(1, 32), 0, 0},
                    {{0, 1}, {0, 1}, q(1, 16), 4, q(1, 4)}};
        default:
            return {{{3, 0, 0}, {3, 0, 0}, q(1, 2304), 1344, q(7, 12)},
                    {{3, 0, 0}, {1, 1, 0}, q(1, 384), 0, 0},
                    {{3, 0, 0}, {0, 0, 1}, q(1, 288), 0, 0},
                    {{1, 1, 0}, {3, 0, 0}, q(1, 384), 0, 0},
                    {{1, 1, 0}, {1, 1, 0}, q(1, 64), 16, q(1, 4)},
                    {{1, 1, 0}, {0, 0, 1}, q(1, 48), 0, 0},
                    {{0, 0, 1}, {3, 0, 0}, q(1, 288), 0, 0},
                    {{0, 0, 1}, {1, 1, 0}, q(1, 48), 0, 0},
                    {{0, 0, 1}, {0, 0, 1}, q(1, 36), 6, q(1, 6)}};
    }
}

Outcome coefficient_tables() {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    int matched = 0;
    for (int half = 1; half <= 3; ++half) {
        auto rows = table_report(half);
        auto expected = published(half);
        out.require(rows.size() == expected.size(), fmt("2N = %d has %zu rows", 2 * half, rows.size()));
        for (const auto &e : expected) {
            bool found = false;
            for (const auto &r : rows) {
                if (r.k.parts() == e.k && r.l.parts() == e.l) {
                    found = true;
                    bool ok = r.v == e.v && r.hash_b == BigInt(e.hash_b) && r.product == e.product;
                    out.require(ok, fmt("2N = %d row mismatch: v = %s, #b = %s, v#b = %s", 2 * half, str(r.v).c_str(),
                                        r.hash_b.str().c_str(), str(r.product).c_str()));
                    matched += ok ? 1 : 0;
                }
            }
            out.require(found, fmt("2N = %d row missing", 2 * half));
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.note(fmt("%d of 14 published rows matched exactly in %.2f s", matched, secs));
    out.require(secs < 60, "runtime above 60 s");
    return out;
}

// ---------------------------------------------------------------------------

Outcome sum_rule_and_limit() {
    Outcome out;
    const Rational conjectured[] = {0, 2, q(8, 3), q(16, 5)};
    for (int half = 1; half <= 3; ++half) {
        auto table = c_coefficients(half);
        Rational sum = 0;
        for (const auto &row : table.rows) {
            sum += row.product;
            if (!(row.k == row.l)) {
                out.require(row.hash_b == 0, fmt("off-diagonal #b non-zero at 2N = %d", 2 * half));
            }
        }
        out.require(sum == 1, fmt("2N = %d: sum v#b = %s", 2 * half, str(sum).c_str()));
        auto nv = ideal_score_novacuum(table);
        // 4^N (N!)^2 / (2N)! evaluated independently.
        BigInt num = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(half));
        num *= oracle::factorial(half) * oracle::factorial(half);
        Rational closed(num, oracle::factorial(2 * half));
        out.require(nv.value == closed && closed == conjectured[half],
                    fmt("2N = %d: no-vacuum score %s", 2 * half, str(nv.value).c_str()));
        out.note(fmt("2N = %d: sum v#b = %s, no-vacuum score = %s", 2 * half, str(sum).c_str(),
                     str(nv.value).c_str()));
    }
    if (deep_mode) {
        auto start = std::chrono::steady_clock::now();
        auto table = c_coefficients(4, 1);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        Rational sum = 0;
        int off_diagonal_nonzero = 0;
        for (const auto &row : table.rows) {
            sum += row.product;
            off_diagonal_nonzero += (!(row.k == row.l) && row.hash_b != 0) ? 1 : 0;
        }
        auto nv = ideal_score_novacuum(table);
        out.note(fmt("report only, 2N = 8 (%.0f s): sum v#b = %s, off-diagonal non-zero rows = %d, no-vacuum = %s "
                     "(closed form %s)",
                     secs, str(sum).c_str(), off_diagonal_nonzero, str(nv.value).c_str(),
                     str(nv.conjectured).c_str()));
    } else {
        out.note("2N = 8 skipped (pass --deep to compute it; report only)");
    }
    return out;
}

// ---------------------------------------------------------------------------

Outcome ideal_score_vs_monte_carlo() {
    Outcome out;
    auto table = c_coefficients(1);
    auto enumerated = oracle::c_coefficients(1);
    out.require(table.c == enumerated, "c_1, c_2 differ from direct enumeration");
    Rational ideal = ideal_score_exact(table, 4);
    out.require(ideal == q(5, 2), "ideal score at 2N = 2, R = 4 is " + str(ideal));
    out.note("c_1 = " + str(table.c[1]) + ", c_2 = " + str(table.c[2]) + ", ideal score (R = 4) = " + str(ideal));

    // The literal check compares the M = 32 estimate with the M -> infinity value. The Haar average at finite M
    // sits below it by an O(1/M) offset that the oracle computes exactly, so the trend checks below carry the
    // evidence that the estimator converges to 5/2. They decide the verdict only under --finite-m-trend.
    bool trend_ok = true;
    auto trend = [&](bool ok, const std::string &what) {
        if (!ok) {
            trend_ok = false;
            out.note("trend check failed: " + what);
        }
    };
    const int big_r = 4;
    const std::size_t trials = 400;
    std::map<int, ScoreReport> mc;
    std::map<int, double> exact;
    for (int m : {8, 16, 32, 64}) {
        exact[m] = to_double(oracle::two_photon_haar_score(m, big_r));
        if (m <= 32) {
            mc[m] = mc_haar_score(0.5, big_r, m, 2, trials, 1);
            double z = (mc[m].value - exact[m]) / mc[m].std_error;
            out.note(fmt("M = %2d: Monte Carlo %.5f +- %.5f, exact Haar average %.5f (z = %+.2f), offset from 5/2 = "
                         "%+.4f",
                         m, mc[m].value, mc[m].std_error, exact[m], z, exact[m] - 2.5));
            trend(std::abs(z) <= 3, fmt("M = %d Monte Carlo disagrees with the exact Haar average", m));
        } else {
            out.note(fmt("M = %2d: exact Haar average %.5f, offset from 5/2 = %+.4f", m, exact[m], exact[m] - 2.5));
        }
    }
    for (int m : {8, 16, 32}) {
        double ratio = (exact[m] - 2.5) / (exact[2 * m] - 2.5);
        trend(ratio > 1.6 && ratio < 2.4, fmt("offset ratio M = %d / %d is %.3f", m, 2 * m, ratio));
    }
    double richardson_exact = 2 * exact[64] - exact[32];
    trend(std::abs(richardson_exact - 2.5) < 0.01, fmt("exact extrapolation 2 S(64) - S(32) = %.5f", richardson_exact));
    double richardson = 2 * mc[32].value - mc[16].value;
    double richardson_se = std::sqrt(4 * mc[32].std_error * mc[32].std_error + mc[16].std_error * mc[16].std_error);
    double rz = (richardson - 2.5) / richardson_se;
    out.note(fmt("extrapolated Monte Carlo 2 S(32) - S(16) = %.4f +- %.4f (z = %+.2f vs 5/2); exact 2 S(64) - S(32) = "
                 "%.5f",
                 richardson, richardson_se, rz, richardson_exact));
    trend(std::abs(rz) <= 3, "extrapolated Monte Carlo is more than 3 standard errors from 5/2");
    out.note(trend_ok ? "finite-M trend checks: all hold (offsets halve per doubling, extrapolation reaches 5/2)"
                      : "finite-M trend checks: at least one failed");

    double raw_z = (mc[32].value - 2.5) / mc[32].std_error;
    out.note(fmt("literal check, M = 32 estimate vs 5/2: z = %+.2f; the exact finite-M offset is %+.4f", raw_z,
                 exact[32] - 2.5));
    if (finite_m_trend_mode) {
        out.note("verdict taken from the finite-M trend checks (--finite-m-trend)");
        if (!trend_ok) {
            out.pass = false;
        }
    } else {
        out.require(std::abs(raw_z) <= 3, "M = 32 estimate is not within 3 standard errors of 5/2");
    }
    return out;
}

// ---------------------------------------------------------------------------

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

CMatrix random_complex(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            a(i, j) = Complex(g(rng), g(rng));
        }
    }
    return a;
}

Outcome hafnian_kernel() {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(4242);
    double worst = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 2 * (1 + t % 6);
        CMatrix r = random_complex(n, n, rng);
        CMatrix a = (r + r.transpose()) / 2;
        worst = std::max(worst, rel_err(hafnian(a), oracle::hafnian(a)));
    }
    out.require(worst <= 1e-9, fmt("worst relative error %.3g", worst));
    out.note(fmt("200 random symmetric matrices up to 12 x 12: worst relative error %.3g", worst));

    double worst_dod = 0;
    double worst_bip = 0;
    for (int t = 0; t < 40; ++t) {
        int n = 2 * (1 + t % 6);
        CMatrix r = random_complex(n, n, rng);
        CMatrix o = (r + r.transpose()) / 2;
        CVector d = random_complex(n, 1, rng);
        Complex prod = d.prod();
        CMatrix dod = d.asDiagonal() * o * d.asDiagonal();
        worst_dod = std::max(worst_dod, rel_err(hafnian(dod), prod * hafnian(o)));
        int h = n / 2;
        CMatrix g = random_complex(h, h, rng);
        CMatrix bip = CMatrix::Zero(n, n);
        bip.topRightCorner(h, h) = g;
        bip.bottomLeftCorner(h, h) = g.transpose();
        worst_bip = std::max(worst_bip, rel_err(hafnian(bip), oracle::permanent(g)));
        worst_bip = std::max(worst_bip, rel_err(permanent(g), oracle::permanent(g)));
    }
    out.require(worst_dod <= 1e-10, fmt("diagonal congruence error %.3g", worst_dod));
    out.require(worst_bip <= 1e-10, fmt("bipartite identity error %.3g", worst_bip));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.note(fmt("diagonal congruence worst %.3g, bipartite/permanent worst %.3g, %.1f s", worst_dod, worst_bip, secs));
    out.require(secs < 120, "runtime above 2 minutes");
    return out;
}

// ---------------------------------------------------------------------------

GbsModel random_model(int m, std::mt19937_64 &rng, int kind) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto u = haar_unitary(m, rng());
    if (kind == 0) {
        std::uniform_int_distribution<int> rr(1, m);
        return build_squeezed_model(0.2 + unit(rng), rr(rng), u);
    }
    if (kind == 1) {
        return build_thermal_model(2 * unit(rng), m);
    }
    std::vector<double> sx(static_cast<std::size_t>(m));
    std::vector<double> sp(static_cast<std::size_t>(m));
    // Squeezed thermal modes: variances e^{+-2s} (2 nbar + 1) respect sx sp >= 1.
    for (int k = 0; k < m; ++k) {
        double s = 1.2 * unit(rng) - 0.6;
        double t = 1.6 * unit(rng) + 1;
        sx[static_cast<std::size_t>(k)] = std::exp(2 * s) * t;
        sp[static_cast<std::size_t>(k)] = std::exp(-2 * s) * t;
    }
    return build_general_model(sx, sp, u);
}

Outcome series_equals_pattern_sum() {
    Outcome out;
    std::mt19937_64 rng(77);
    double worst = 0;
    int comparisons = 0;
    for (int t = 0; t < 50; ++t) {
        int m = 1 + t % 4;
        auto model = random_model(m, rng, t % 3);
        for (int n = 0; n <= 4; ++n) {
            double brute = oracle::sector_probability(model.a, m, n);
            double series = total_photon_probability(model, n);
            double err = std::abs(series - brute) / std::max(brute, 1e-300);
            if (brute < 1e-13) {
                err = std::abs(series - brute);  // odd squeezed sectors vanish
            }
            worst = std::max(worst, err);
            ++comparisons;
        }
    }
    out.require(worst <= 1e-9, fmt("worst relative error %.3g", worst));
    out.note(fmt("50 random models (M <= 4), %d sector comparisons: worst relative error %.3g", comparisons, worst));

    double worst_closed = 0;
    for (int t = 0; t < 10; ++t) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        int m = 2 + t % 3;
        int big_r = 1 + t % m;
        double r = 0.1 + unit(rng);
        auto model = build_squeezed_model(r, big_r, haar_unitary(m, rng()));
        for (int n = 1; n <= 3; ++n) {
            double closed = oracle::squeezed_sector(r, big_r, n);
            worst_closed = std::max(worst_closed, std::abs(total_photon_probability(model, 2 * n) - closed) / closed);
        }
    }
    out.require(worst_closed <= 1e-9, fmt("squeezed closed form error %.3g", worst_closed));
    out.note(fmt("squeezed closed form sech^R tanh^2N binom(R/2+N-1, N): worst relative error %.3g", worst_closed));
    return out;
}

// ---------------------------------------------------------------------------

Outcome uniform_reference() {
    Outcome out;
    std::mt19937_64 rng(606);
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
        int m = 2 + t % 3;
        int n = 1 + t % 3;
        auto b = random_model(m, rng, t % 2 == 0 ? 2 : 0);
        if (b.kind == ModelKind::Squeezed && n % 2 == 1) {
            n += 1;
        }
        auto th = build_thermal_model(0.3 + 0.1 * t, m);
        double k = static_cast<double>(count_patterns(m, n));
        worst = std::max(worst, std::abs(k * lxe_bruteforce(th, b, n) - 1));
    }
    out.require(worst <= 1e-9, fmt("worst |K| LXE - 1 = %.3g", worst));
    out.note(fmt("20 random models B: worst ||K(N)| LXE(thermal, B) - 1| = %.3g", worst));

    const std::size_t draws = 100000;
    auto set = sample_bruteforce(build_thermal_model(0.9, 3), 2, draws, 2718);
    std::map<DetectionPattern, double> counts;
    for (const auto &s : set.samples) {
        counts[s] += 1;
    }
    const double p = 1.0 / 6.0;
    const double sd = std::sqrt(draws * p * (1 - p));
    double worst_z = 0;
    double chi2 = 0;
    for (const auto &pat : oracle::patterns(3, 2)) {
        double z = (counts[pat] - draws * p) / sd;
        worst_z = std::max(worst_z, std::abs(z));
        chi2 += (counts[pat] - draws * p) * (counts[pat] - draws * p) / (draws * p);
    }
    out.require(worst_z <= 3, fmt("thermal sampler cell deviates by %.2f sigma", worst_z));
    out.note(fmt("thermal sampler, 1e5 draws over 6 cells: worst |z| = %.2f, chi^2 = %.2f (5 dof)", worst_z, chi2));
    return out;
}

// ---------------------------------------------------------------------------

Outcome phase_integral() {
    Outcome out;
    int cases = 0;
    int mismatches = 0;
    std::vector<IndexSequence> seqs;
    for (int x = 0; x < 81; ++x) {
        IndexSequence s(4);
        int y = x;
        for (int i = 0; i < 4; ++i) {
            s[static_cast<std::size_t>(i)] = 1 + y % 3;
            y /= 3;
        }
        seqs.push_back(s);
    }
    for (const auto &j : seqs) {
        for (const auto &jp : seqs) {
            ++cases;
            if (phase_integral_indicator(j, jp) != Rational(oracle::multiset_equal(j, jp))) {
                ++mismatches;
            }
        }
    }
    out.require(cases == 6561 && mismatches == 0, fmt("%d mismatches", mismatches));
    out.note(fmt("M = 3, length 4: %d pairs, %d mismatches against the multiset indicator", cases, mismatches));

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    int identities = 0;
    for (int m = 1; m <= 3; ++m) {
        for (int rep = 0; rep < 5; ++rep) {
            std::map<std::pair<IndexSequence, IndexSequence>, Rational> values;
            TestFunction h = [&](const IndexSequence &a, const IndexSequence &b) {
                auto key = std::make_pair(a, b);
                auto it = values.find(key);
                if (it == values.end()) {
                    it = values.emplace(key, Rational(num(rng), den(rng))).first;
                }
                return it->second;
            };
            auto sides = reordering_identity(m, 2, h);
            out.require(sides.lhs == sides.rhs, fmt("reordering identity fails at M = %d", m));
            ++identities;
        }
    }
    out.note(fmt("re-summation identity exact for %d random rational test functions (M <= 3, 2N = 2)", identities));
    return out;
}

// ---------------------------------------------------------------------------

Outcome weingarten_suite() {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    int rows = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int m : {n, n + 1, n + 3, 12}) {
            auto gram_inverse = oracle::weingarten(n, m);
            oracle::for_each_permutation(n, [&](const std::vector<int> &p) {
                auto sigma = Permutation::from_zero_based(p);
                Rational row = weingarten_orthogonality_row(sigma, m);
                out.require(row == Rational(sigma.is_identity() ? 1 : 0), "orthogonality row");
                out.require(weingarten(sigma, m) == gram_inverse.at(p), "Gram inverse mismatch");
                ++rows;
            });
        }
    }
    out.note(fmt("exact orthogonality and Gram-inverse agreement for %d (sigma, M) pairs, n <= 4", rows));

    // Twenty monomials with mixed degrees, dimensions and index patterns.
    std::mt19937_64 rng(8080);
    double worst_z = 0;
    int monomials = 0;
    while (monomials < 20) {
        int n = 1 + monomials % 3;
        int m = std::max(n, 2 + monomials % 4);
        std::uniform_int_distribution<int> idx(1, m);
        IndexSequence j(static_cast<std::size_t>(n));
        IndexSequence mu(static_cast<std::size_t>(n));
        IndexSequence jp(static_cast<std::size_t>(n));
        IndexSequence nu(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            j[static_cast<std::size_t>(i)] = idx(rng);
            mu[static_cast<std::size_t>(i)] = idx(rng);
        }
        jp = j;
        nu = mu;
        std::shuffle(jp.begin(), jp.end(), rng);
        std::shuffle(nu.begin(), nu.end(), rng);
        if (monomials % 7 == 6) {
            jp[0] = jp[0] % m + 1;  // a row mismatch, so the average vanishes
        }
        Rational exact = haar_monomial_average(j, mu, jp, nu, m);
        auto zb = [](IndexSequence s) {
            for (auto &x : s) {
                --x;
            }
            return s;
        };
        out.require(exact == oracle::haar_moment(zb(j), zb(mu), zb(jp), zb(nu), oracle::weingarten(n, m)),
                    "monomial average differs from the permutation-sum oracle");
        auto mc = mc_monomial_average(j, mu, jp, nu, m, 1000000, 100 + static_cast<std::uint64_t>(monomials));
        double zr = (mc.mean.real() - to_double(exact)) / mc.std_error_real;
        double zi = mc.std_error_imag > 0 ? mc.mean.imag() / mc.std_error_imag : 0.0;
        worst_z = std::max({worst_z, std::abs(zr), std::abs(zi)});
        ++monomials;
    }
    out.require(worst_z <= 3, fmt("worst Monte Carlo |z| = %.2f", worst_z));
    out.note(fmt("20 monomials x 1e6 Haar draws: worst |z| = %.2f", worst_z));

    // Leading-order asymptotics: the scaled residual must settle to a constant.
    double worst_spread = 0;
    for (int n = 1; n <= 4; ++n) {
        std::map<std::vector<int>, Permutation> classes;
        oracle::for_each_permutation(n, [&](const std::vector<int> &p) {
            auto s = Permutation::from_zero_based(p);
            classes.emplace(cycle_type(s).parts, s);
        });
        for (const auto &[type, sigma] : classes) {
            int power = n + transposition_norm(sigma) + 2;
            std::vector<double> scaled;
            for (int m = 8; m <= 64; ++m) {
                Rational resid = weingarten(sigma, m) - asymptotic_weingarten_exact(sigma, m);
                if (resid < 0) {
                    resid = -resid;
                }
                BigInt scale = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(power));
                scaled.push_back(to_double(resid * Rational(scale)));
            }
            double limit = scaled.back();
            double peak = *std::max_element(scaled.begin(), scaled.end());
            out.require(std::isfinite(peak) && peak <= 3 * limit + 1e-12,
                        fmt("scaled residual not bounded for n = %d (peak %.3g, M = 64 value %.3g)", n, peak, limit));
            worst_spread = std::max(worst_spread, limit > 0 ? peak / limit : 0.0);
        }
    }
    out.note(fmt("scaled residual |Wg - leading| M^(n+|sigma|+2) over M = 8..64: max / value at 64 = %.3f",
                 worst_spread));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.note(fmt("%.1f s", secs));
    out.require(secs < 900, "runtime above 15 minutes");
    return out;
}

// ---------------------------------------------------------------------------

Outcome estimator_consistency() {
    Outcome out;
    int covered = 0;
    const int runs = 100;
    double mean_abs_z = 0;
    for (int s = 0; s < runs; ++s) {
        auto u = haar_unitary(3, mix_seed(9000, static_cast<std::uint64_t>(s)));
        auto model = build_squeezed_model(0.6, 3, u);
        auto samples = sample_bruteforce(model, 2, 10000, mix_seed(9100, static_cast<std::uint64_t>(s)));
        auto report = score_from_samples(samples, u, 0.6, 3, 2);
        double truth = static_cast<double>(count_patterns(3, 2)) * lxe_bruteforce(model, model, 2);
        double z = (report.value - truth) / report.std_error;
        mean_abs_z += std::abs(z) / runs;
        covered += std::abs(z) <= 3 ? 1 : 0;
    }
    out.require(covered >= 95, fmt("coverage %d / %d", covered, runs));
    out.note(fmt("3-sigma coverage %d / %d runs (M = 3, 2N = 2, L = 1e4), mean |z| = %.3f", covered, runs,
                 mean_abs_z));
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    int only = 0;
    std::vector<int> skip;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--deep") == 0) {
            deep_mode = true;
        } else if (std::strcmp(argv[i], "--finite-m-trend") == 0) {
            finite_m_trend_mode = true;
        } else if (std::strcmp(argv[i], "--skip") == 0 && i + 1 < argc) {
            skip.push_back(std::atoi(argv[++i]));
        } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--deep] [--only N] [--skip N]... [--finite-m-trend]\n", argv[0]);
            return 2;
        }
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exact coefficient tables for 2N = 2, 4, 6", coefficient_tables},
        {"sum rule, vanishing off-diagonal counts, no-vacuum closed form", sum_rule_and_limit},
        {"ideal score at 2N = 2 against finite-M Haar Monte Carlo", ideal_score_vs_monte_carlo},
        {"hafnian kernel against matching enumeration and identities", hafnian_kernel},
        {"cycle-index series against brute-force sector sums", series_equals_pattern_sum},
        {"uniform thermal reference and thermal sampler", uniform_reference},
        {"phase-integral expansion and re-summation identity", phase_integral},
        {"Weingarten orthogonality, monomial averages, asymptotics", weingarten_suite},
        {"sample-based estimator coverage", estimator_consistency},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int number = static_cast<int>(i) + 1;
        if ((only != 0 && only != number) || std::find(skip.begin(), skip.end(), number) != skip.end()) {
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception &e) {
            outcome.pass = false;
            outcome.note(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s [%.1f s]\n", outcome.pass ? "PASS" : "FAIL", number,
                    criteria[i].first.c_str(), secs);
        for (const auto &d : outcome.details) {
            std::printf("    %s\n", d.c_str());
        }
        std::fflush(stdout);
        failed += outcome.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
