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

#include "gbslxe/hafnian.hpp"

#include <bit>
#include <numeric>

#include "gbslxe/parallel.hpp"

namespace gbslxe {

int total_photons(const DetectionPattern &n) {
    int total = 0;
    for (int c : n) {
        if (c < 0) {
            fail("photon counts must be non-negative");
        }
        total += c;
    }
    return total;
}

namespace {

void check_symmetric(const CMatrix &o) {
    if (o.rows() != o.cols()) {
        fail("hafnian needs a square matrix");
    }
    if (o.rows() % 2 != 0) {
        fail("hafnian needs an even dimension");
    }
    if (o.size() == 0) {
        return;
    }
    double scale = std::max(1.0, o.cwiseAbs().maxCoeff());
    if ((o - o.transpose()).cwiseAbs().maxCoeff() > Tolerances::symmetric * scale) {
        fail("hafnian needs a symmetric matrix");
    }
}

// Coefficient of x^n in exp(sum_k c_k x^k), truncated polynomial arithmetic.
Complex exp_coefficient(const std::vector<Complex> &c, int n) {
    std::vector<Complex> term(static_cast<std::size_t>(n + 1), Complex(0));
    term[0] = 1;
    Complex result = 0;
    for (int j = 1; j <= n; ++j) {
        std::vector<Complex> next(static_cast<std::size_t>(n + 1), Complex(0));
        for (int a = 0; a <= n; ++a) {
            if (term[static_cast<std::size_t>(a)] == Complex(0)) {
                continue;
            }
            for (int b = 1; a + b <= n; ++b) {
                next[static_cast<std::size_t>(a + b)] += term[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(b)];
            }
        }
        for (auto &x : next) {
            x /= static_cast<double>(j);
        }
        term.swap(next);
        result += term[static_cast<std::size_t>(n)];
    }
    return result;
}

// Term of the inclusion-exclusion sum for the pair subset encoded in `mask`.
Complex subset_term(const CMatrix &o, int m, std::uint64_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i) {
        if (mask >> i & 1ULL) {
            idx.push_back(2 * i);
            idx.push_back(2 * i + 1);
        }
    }
    const int d = static_cast<int>(idx.size());
    if (d == 0) {
        return 0;
    }
    // B = A_Z X_Z, where X swaps the two members of each pair.
    CMatrix b(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            b(r, c) = o(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c ^ 1)]);
        }
    }
    std::vector<Complex> coeff(static_cast<std::size_t>(m + 1), Complex(0));
    CMatrix power = b;
    for (int k = 1; k <= m; ++k) {
        coeff[static_cast<std::size_t>(k)] = power.trace() / (2.0 * k);
        if (k < m) {
            power = (power * b).eval();
        }
    }
    return exp_coefficient(coeff, m);
}

}  // namespace

Complex hafnian(const CMatrix &o, unsigned threads) {
    check_symmetric(o);
    const int m = static_cast<int>(o.rows() / 2);
    if (m == 0) {
        return 1;
    }
    if (m > 30) {
        fail("hafnian dimension too large");
    }
    if (m == 1) {
        return o(0, 1);
    }
    const std::uint64_t subsets = 1ULL << m;
    // Fixed block count keeps the summation order independent of threads.
    const std::size_t blocks = std::min<std::uint64_t>(subsets, 64);
    std::vector<Complex> partial(blocks, Complex(0));
    parallel_for(blocks, threads, [&](std::size_t blk) {
        std::uint64_t begin = subsets * blk / blocks;
        std::uint64_t end = subsets * (blk + 1) / blocks;
        Complex sum = 0;
        for (std::uint64_t mask = std::max<std::uint64_t>(begin, 1); mask < end; ++mask) {
            int size = std::popcount(mask);
            Complex t = subset_term(o, m, mask);
            sum += ((m - size) % 2 == 0) ? t : -t;
        }
        partial[blk] = sum;
    });
    Complex total = 0;
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

namespace {

void matchings_rec(const CMatrix &o, std::vector<int> &free, Complex prod, Complex &total) {
    if (free.empty()) {
        total += prod;
        return;
    }
    int first = free[0];
    for (std::size_t i = 1; i < free.size(); ++i) {
        int partner = free[i];
        std::vector<int> rest;
        rest.reserve(free.size() - 2);
        for (std::size_t j = 1; j < free.size(); ++j) {
            if (j != i) {
                rest.push_back(free[j]);
            }
        }
        matchings_rec(o, rest, prod * o(first, partner), total);
    }
}

}  // namespace

Complex hafnian_by_matchings(const CMatrix &o) {
    check_symmetric(o);
    if (o.rows() > 16) {
        fail_guard("matching enumeration is limited to dimension 16");
    }
    std::vector<int> free(static_cast<std::size_t>(o.rows()));
    std::iota(free.begin(), free.end(), 0);
    Complex total = 0;
    matchings_rec(o, free, Complex(1), total);
    return total;
}

Complex permanent(const CMatrix &g) {
    if (g.rows() != g.cols()) {
        fail("permanent needs a square matrix");
    }
    const int n = static_cast<int>(g.rows());
    if (n == 0) {
        return 1;
    }
    if (n > 40) {
        fail("permanent dimension too large");
    }
    // Glynn: perm = 2^{1-n} sum_delta (prod delta) prod_j sum_i delta_i g_ij,
    // delta_0 = +1, other signs walked in Gray-code order.
    CVector row_sum = g.colwise().sum().transpose();
    std::vector<int> delta(static_cast<std::size_t>(n), 1);
    int sign = 1;
    Complex total = row_sum.prod();
    const std::uint64_t steps = 1ULL << (n - 1);
    for (std::uint64_t k = 1; k < steps; ++k) {
        int i = std::countr_zero(k) + 1;  // flipped row, never row 0
        delta[static_cast<std::size_t>(i)] = -delta[static_cast<std::size_t>(i)];
        row_sum += 2.0 * delta[static_cast<std::size_t>(i)] * g.row(i).transpose();
        sign = -sign;
        Complex p = row_sum.prod();
        total += sign > 0 ? p : -p;
    }
    return total / static_cast<double>(steps);
}

namespace {

std::vector<int> repeated_indices(const DetectionPattern &n) {
    std::vector<int> idx;
    for (std::size_t k = 0; k < n.size(); ++k) {
        for (int c = 0; c < n[k]; ++c) {
            idx.push_back(static_cast<int>(k));
        }
    }
    return idx;
}

}  // namespace

CMatrix reduce_matrix(const CMatrix &a, const DetectionPattern &n) {
    const int m = static_cast<int>(n.size());
    if (a.rows() != 2 * m || a.cols() != 2 * m) {
        fail("pattern length does not match the model size");
    }
    if (total_photons(n) == 0) {
        fail("reduce_matrix needs at least one photon");
    }
    std::vector<int> half = repeated_indices(n);
    std::vector<int> idx = half;
    for (int k : half) {
        idx.push_back(k + m);
    }
    const int d = static_cast<int>(idx.size());
    CMatrix out(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            out(r, c) = a(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

CMatrix reduce_half(const CMatrix &v, const DetectionPattern &n) {
    if (v.rows() != static_cast<Eigen::Index>(n.size()) || v.cols() != v.rows()) {
        fail("pattern length does not match the matrix size");
    }
    std::vector<int> idx = repeated_indices(n);
    const int d = static_cast<int>(idx.size());
    CMatrix out(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            out(r, c) = v(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

}  // namespace gbslxe
