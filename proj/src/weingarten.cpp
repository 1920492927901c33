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

#include "gbslxe/weingarten.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "gbslxe/models.hpp"
#include "gbslxe/parallel.hpp"
#include "gbslxe/rng.hpp"

namespace gbslxe {

IntegerPartition cycle_type(const Permutation &p) {
    IntegerPartition out;
    for (const auto &c : cycle_decomposition(p)) {
        out.parts.push_back(static_cast<int>(c.size()));
    }
    std::sort(out.parts.rbegin(), out.parts.rend());
    return out;
}

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_zero_based(map));
    } while (std::next_permutation(map.begin(), map.end()));
    return out;
}

// Solves a x = b in place by Gauss-Jordan elimination over the rationals.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            fail_numeric("singular Weingarten system");
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) {
                continue;
            }
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        b[i] /= a[i][i];
    }
    return b;
}

BigInt int_pow(int base, int exp) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp)); }

}  // namespace

WeingartenTable::WeingartenTable(int n, int m) : n_(n), m_(m) {
    if (n < 1 || n > kMaxWeingartenDegree) {
        fail_guard("Weingarten degree must lie in 1..6");
    }
    if (m < n) {
        fail("Weingarten via Gram inversion needs M >= n");
    }
    auto perms = all_permutations(n);
    // Class index for each permutation, plus one representative per class.
    std::map<std::vector<int>, std::size_t> class_of;
    std::vector<std::size_t> class_index(perms.size());
    std::vector<std::size_t> representative;
    std::vector<std::vector<int>> keys;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        auto key = cycle_type(perms[i]).parts;
        auto [it, inserted] = class_of.emplace(key, keys.size());
        if (inserted) {
            keys.push_back(key);
            representative.push_back(i);
        }
        class_index[i] = it->second;
    }
    const std::size_t classes = keys.size();
    // Row for class lambda: sum over tau of M^{#cycles(sigma_lambda^-1 tau)} Wg(class(tau)).
    std::vector<std::vector<Rational>> a(classes, std::vector<Rational>(classes, Rational(0)));
    std::vector<Rational> b(classes, Rational(0));
    for (std::size_t row = 0; row < classes; ++row) {
        Permutation inv = perms[representative[row]].inverse();
        std::vector<BigInt> acc(classes, BigInt(0));
        for (std::size_t t = 0; t < perms.size(); ++t) {
            int cycles = cycle_count((inv * perms[t]).zero_based());
            acc[class_index[t]] += int_pow(m, cycles);
        }
        for (std::size_t c = 0; c < classes; ++c) {
            a[row][c] = Rational(acc[c]);
        }
        if (perms[representative[row]].is_identity()) {
            b[row] = 1;
        }
    }
    auto x = solve_exact(std::move(a), std::move(b));
    for (std::size_t c = 0; c < classes; ++c) {
        values_.emplace(keys[c], x[c]);
    }
}

Rational WeingartenTable::operator()(const Permutation &sigma) const {
    if (sigma.degree() != n_) {
        fail("permutation degree does not match the Weingarten table");
    }
    return values_.at(cycle_type(sigma).parts);
}

std::shared_ptr<const WeingartenTable> weingarten_table(int n, int m) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const WeingartenTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({n, m});
        if (it != cache.end()) {
            return it->second;
        }
    }
    auto table = std::make_shared<const WeingartenTable>(n, m);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(n, m), table).first->second;
}

Rational weingarten(const Permutation &sigma, int m) { return (*weingarten_table(sigma.degree(), m))(sigma); }

Rational weingarten_orthogonality_row(const Permutation &sigma, int m) {
    auto table = weingarten_table(sigma.degree(), m);
    Permutation inv = sigma.inverse();
    Rational total = 0;
    for (const auto &tau : all_permutations(sigma.degree())) {
        total += Rational(int_pow(m, cycle_count((inv * tau).zero_based()))) * (*table)(tau);
    }
    return total;
}

namespace {

void check_indices(const IndexSequence &s, int m) {
    for (int v : s) {
        if (v < 1 || v > m) {
            fail("matrix index out of range 1..M");
        }
    }
}

}  // namespace

Rational haar_monomial_average(const IndexSequence &j, const IndexSequence &mu, const IndexSequence &jp,
                               const IndexSequence &nu, int m) {
    if (j.size() != mu.size() || jp.size() != nu.size()) {
        fail("row and column index sequences must pair up");
    }
    if (j.size() != jp.size()) {
        fail("numbers of U and conj(U) factors differ; use the Monte Carlo routine for unbalanced monomials");
    }
    for (const auto *s : {&j, &mu, &jp, &nu}) {
        check_indices(*s, m);
    }
    const int n = static_cast<int>(j.size());
    if (n == 0) {
        return 1;
    }
    auto rows = enumerate_matchers(j, jp);
    if (rows.empty()) {
        return 0;
    }
    auto cols = enumerate_matchers(mu, nu);
    if (cols.empty()) {
        return 0;
    }
    auto table = weingarten_table(n, m);
    Rational total = 0;
    for (const auto &rho : rows) {
        Permutation inv = rho.inverse();
        for (const auto &tau : cols) {
            total += (*table)(inv * tau);
        }
    }
    return total;
}

MonteCarloMoment mc_monomial_average(const IndexSequence &j, const IndexSequence &mu, const IndexSequence &jp,
                                     const IndexSequence &nu, int m, std::size_t trials, std::uint64_t seed,
                                     unsigned threads) {
    if (j.size() != mu.size() || jp.size() != nu.size()) {
        fail("row and column index sequences must pair up");
    }
    if (trials < 2) {
        fail("Monte Carlo average needs at least 2 trials");
    }
    for (const auto *s : {&j, &mu, &jp, &nu}) {
        check_indices(*s, m);
    }
    std::vector<Complex> values(trials);
    parallel_for(trials, threads, [&](std::size_t t) {
        UnitaryMatrix u = haar_unitary(m, mix_seed(seed, t));
        const CMatrix &e = u.entries();
        Complex v = 1;
        for (std::size_t a = 0; a < j.size(); ++a) {
            v *= e(j[a] - 1, mu[a] - 1);
        }
        for (std::size_t a = 0; a < jp.size(); ++a) {
            v *= std::conj(e(jp[a] - 1, nu[a] - 1));
        }
        values[t] = v;
    });
    Complex sum = 0;
    for (const auto &v : values) {
        sum += v;
    }
    const double count = static_cast<double>(trials);
    MonteCarloMoment out;
    out.mean = sum / count;
    double ssr = 0;
    double ssi = 0;
    for (const auto &v : values) {
        ssr += (v.real() - out.mean.real()) * (v.real() - out.mean.real());
        ssi += (v.imag() - out.mean.imag()) * (v.imag() - out.mean.imag());
    }
    out.std_error_real = std::sqrt(ssr / (count - 1) / count);
    out.std_error_imag = std::sqrt(ssi / (count - 1) / count);
    return out;
}

Rational asymptotic_weingarten_exact(const Permutation &sigma, int m) {
    if (m < 1) {
        fail("M must be positive");
    }
    int exponent = sigma.degree() + transposition_norm(sigma);
    return moebius(sigma) / Rational(int_pow(m, exponent));
}

double asymptotic_weingarten(const Permutation &sigma, int m) { return to_double(asymptotic_weingarten_exact(sigma, m)); }

}  // namespace gbslxe
