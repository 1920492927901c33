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

#include "gbslxe/idealscore.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

#include "gbslxe/parallel.hpp"

namespace gbslxe {

std::vector<BigInt> count_bl(const IndexSequence &g, const IndexSequence &h) {
    if (g.size() != h.size()) {
        fail("count_bl needs sequences of equal length");
    }
    if (g.size() % 2 != 0) {
        fail("count_bl needs sequences of even length");
    }
    std::vector<std::uint64_t> hist(g.size() / 2 + 1, 0);
    for_each_matcher(g, h, [&](std::span<const int> rho) { ++hist[static_cast<std::size_t>(coset_type_length(rho))]; });
    return std::vector<BigInt>(hist.begin(), hist.end());
}

Rational composition_weight(const ConstrainedComposition &k, const ConstrainedComposition &l) {
    if (k.half_size() != l.half_size()) {
        fail("compositions of different N");
    }
    BigInt den = 1;
    for (int a = 1; a <= k.half_size(); ++a) {
        den *= factorial(static_cast<unsigned>(k.part(a)));
        den *= factorial(static_cast<unsigned>(l.part(a)));
        BigInt base = 2 * a;
        den *= boost::multiprecision::pow(base, static_cast<unsigned>(k.part(a) + l.part(a)));
    }
    return Rational(BigInt(1), den);
}

BigInt c_coefficients_cost(int half_size) {
    BigInt pairs = constrained_compositions(half_size).size();
    pairs *= pairs;
    return pairs * factorial(static_cast<unsigned>(2 * half_size)) * (BigInt(1) << (2 * half_size));
}

namespace {

// Permutation of {0..n-1} with Lehmer-code rank `index`.
void unrank_permutation(std::uint64_t index, int n, std::vector<int> &out) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) {
        fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    }
    out.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::uint64_t f = fact[static_cast<std::size_t>(n - 1 - i)];
        std::uint64_t digit = index / f;
        index %= f;
        out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(digit)];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
}


// Specialized matcher walk for g = j + sigma(j), h = Omega_k(j) + Omega_l(sigma(j))
// with j made of 2N distinct labels. Every label appears twice in g and twice in
// h, so each label contributes a two-way choice and there are 2^{2N} matchers.
// The coset-type length is computed on the quotient graph whose nodes are the
// pairs {2k, 2k+1}: component count is unchanged by contracting those edges.
struct PairKernel {
    int n2 = 0;  // 2N
    // For label v: target positions t1[v], t2[v] in h; sources s1[v], s2[v] in g.
    int t1[16], t2[16], s1[16], s2[16];

    void load(const std::vector<int> &omega_k_inv, const std::vector<int> &omega_l_inv,
              const std::vector<int> &sigma, const std::vector<int> &sigma_inv) {
        (void)sigma;
        for (int v = 0; v < n2; ++v) {
            s1[v] = v;
            s2[v] = n2 + sigma_inv[static_cast<std::size_t>(v)];
            t1[v] = omega_k_inv[static_cast<std::size_t>(v)];
            t2[v] = n2 + omega_l_inv[static_cast<std::size_t>(sigma_inv[static_cast<std::size_t>(v)])];
        }
    }

    void accumulate(std::uint64_t *hist) const {
        int rho[32];
        const std::uint32_t masks = 1u << n2;
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            for (int v = 0; v < n2; ++v) {
                if (mask >> v & 1u) {
                    rho[t1[v]] = s2[v];
                    rho[t2[v]] = s1[v];
                } else {
                    rho[t1[v]] = s1[v];
                    rho[t2[v]] = s2[v];
                }
            }
            int parent[16];
            for (int p = 0; p < n2; ++p) {
                parent[p] = p;
            }
            int components = n2;
            for (int e = 0; e < n2; ++e) {
                int a = rho[2 * e] >> 1;
                int b = rho[2 * e + 1] >> 1;
                while (parent[a] != a) {
                    a = parent[a];
                }
                while (parent[b] != b) {
                    b = parent[b];
                }
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
            ++hist[components];
        }
    }
};

std::vector<int> inverse_map(std::span<const int> map) {
    std::vector<int> inv(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        inv[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
    }
    return inv;
}

}  // namespace

CoefficientTable c_coefficients(int half_size, unsigned threads, const ProgressFn &progress, int max_half_size) {
    if (half_size < 1) {
        fail("c_coefficients needs N >= 1");
    }
    if (half_size > max_half_size || half_size > 8) {
        fail_guard("N = " + std::to_string(half_size) + " exceeds the feasibility bound " +
                   std::to_string(max_half_size) + " (about " + c_coefficients_cost(half_size).str() +
                   " graph evaluations)");
    }
    const int n2 = 2 * half_size;
    auto comps = constrained_compositions(half_size);
    const std::size_t nk = comps.size();
    std::vector<std::vector<int>> omega_inv;
    for (const auto &k : comps) {
        omega_inv.push_back(inverse_map(omega_permutation(k).zero_based()));
    }
    std::uint64_t sigmas = 1;
    for (int i = 2; i <= n2; ++i) {
        sigmas *= static_cast<std::uint64_t>(i);
    }
    const std::size_t hist_width = static_cast<std::size_t>(n2 + 1);
    const std::size_t blocks = static_cast<std::size_t>(std::min<std::uint64_t>(sigmas, 256));
    // hist[block][pair * width + length]
    std::vector<std::vector<std::uint64_t>> partial(blocks, std::vector<std::uint64_t>(nk * nk * hist_width, 0));
    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mutex;
    parallel_for(blocks, threads, [&](std::size_t blk) {
        std::uint64_t begin = sigmas * blk / blocks;
        std::uint64_t end = sigmas * (blk + 1) / blocks;
        std::vector<int> sigma;
        PairKernel kernel;
        kernel.n2 = n2;
        auto &hist = partial[blk];
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            unrank_permutation(idx, n2, sigma);
            auto sigma_inv = inverse_map(sigma);
            for (std::size_t a = 0; a < nk; ++a) {
                for (std::size_t b = 0; b < nk; ++b) {
                    kernel.load(omega_inv[a], omega_inv[b], sigma, sigma_inv);
                    kernel.accumulate(hist.data() + (a * nk + b) * hist_width);
                }
            }
        }
        std::uint64_t now = done.fetch_add(end - begin) + (end - begin);
        if (progress) {
            std::lock_guard<std::mutex> lock(progress_mutex);
            progress(now, sigmas);
        }
    });

    CoefficientTable table;
    table.half_size = half_size;
    table.c.assign(hist_width, Rational(0));
    for (std::size_t a = 0; a < nk; ++a) {
        for (std::size_t b = 0; b < nk; ++b) {
            TableRow row;
            row.k = comps[a];
            row.l = comps[b];
            row.v = composition_weight(comps[a], comps[b]);
            row.b_by_length.assign(hist_width, BigInt(0));
            for (const auto &hist : partial) {
                for (std::size_t len = 0; len < hist_width; ++len) {
                    row.b_by_length[len] += hist[(a * nk + b) * hist_width + len];
                }
            }
            row.hash_b = row.b_by_length[static_cast<std::size_t>(n2)];
            row.product = row.v * Rational(row.hash_b);
            for (std::size_t len = 1; len < hist_width; ++len) {
                table.c[len] += row.v * Rational(row.b_by_length[len]);
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

Rational score_prefactor(int half_size) {
    BigInt num = (BigInt(1) << (2 * half_size)) * factorial(static_cast<unsigned>(half_size)) *
                 factorial(static_cast<unsigned>(half_size));
    return Rational(num, factorial(static_cast<unsigned>(2 * half_size)));
}

Rational ideal_score_exact(const CoefficientTable &table, int squeezed_modes) {
    if (squeezed_modes < 1) {
        fail("ideal score needs R >= 1");
    }
    const int n = table.half_size;
    // (R-2)!! / (R+2N-2)!! = 1 / (R (R+2) ... (R+2N-2)).
    BigInt rising = 1;
    for (int i = 0; i < n; ++i) {
        rising *= squeezed_modes + 2 * i;
    }
    Rational ratio(BigInt(1), rising);
    Rational poly = 0;
    BigInt power = 1;
    for (std::size_t len = 1; len < table.c.size(); ++len) {
        power *= squeezed_modes;
        poly += table.c[len] * Rational(power);
    }
    return score_prefactor(n) * ratio * ratio * poly;
}

double ideal_score(const CoefficientTable &table, int squeezed_modes) {
    return to_double(ideal_score_exact(table, squeezed_modes));
}

double ideal_score(int half_size, int squeezed_modes, unsigned threads) {
    return ideal_score(c_coefficients(half_size, threads), squeezed_modes);
}

NoVacuumScore ideal_score_novacuum(const CoefficientTable &table) {
    Rational sum = 0;
    for (const auto &row : table.rows) {
        sum += row.product;
    }
    NoVacuumScore out;
    out.value = score_prefactor(table.half_size) * sum;
    out.conjectured = score_prefactor(table.half_size);
    out.equal = out.value == out.conjectured;
    return out;
}

NoVacuumScore ideal_score_novacuum(int half_size, unsigned threads) {
    return ideal_score_novacuum(c_coefficients(half_size, threads));
}

std::vector<TableRow> table_report(int half_size, unsigned threads) {
    return c_coefficients(half_size, threads).rows;
}

BigInt f_delta(const IndexSequence &h, const IndexSequence &g) {
    if (h.size() != g.size()) {
        fail("f_delta needs sequences of equal length");
    }
    if (h.size() > 8) {
        fail_guard("f_delta loops over S_m and is limited to m <= 8");
    }
    std::vector<int> map(h.size());
    std::iota(map.begin(), map.end(), 0);
    BigInt total = 0;
    do {
        bool all = true;
        for (std::size_t a = 0; a < h.size() && all; ++a) {
            all = h[a] == g[static_cast<std::size_t>(map[a])];
        }
        if (all) {
            ++total;
        }
    } while (std::next_permutation(map.begin(), map.end()));
    return total;
}

namespace {

IndexSequence substitute_representatives(const IndexSequence &j, const SetPartition &lambda) {
    IndexSequence out(j.size());
    for (const auto &block : lambda.blocks) {
        int rep = j[static_cast<std::size_t>(block.front() - 1)];
        for (int f : block) {
            out[static_cast<std::size_t>(f - 1)] = rep;
        }
    }
    return out;
}

}  // namespace

Rational phase_integral_indicator(const IndexSequence &j, const IndexSequence &jp) {
    if (j.size() != jp.size()) {
        fail("phase integral needs sequences of equal length");
    }
    if (j.empty()) {
        return 1;
    }
    Rational total = 0;
    for_each_set_partition(static_cast<int>(j.size()), [&](const SetPartition &lambda) {
        std::vector<int> reps;
        for (const auto &block : lambda.blocks) {
            reps.push_back(j[static_cast<std::size_t>(block.front() - 1)]);
        }
        // prod over blocks and members of delta(j_rep, j_f)
        for (std::size_t b = 0; b < lambda.blocks.size(); ++b) {
            for (int f : lambda.blocks[b]) {
                if (j[static_cast<std::size_t>(f - 1)] != reps[b]) {
                    return;
                }
            }
        }
        // prod over distinct blocks of (1 - delta(j_rep, j_rep'))
        for (std::size_t a = 0; a < reps.size(); ++a) {
            for (std::size_t b = 0; b < reps.size(); ++b) {
                if (a != b && reps[a] == reps[b]) {
                    return;
                }
            }
        }
        IndexSequence g = substitute_representatives(j, lambda);
        total += Rational(f_delta(jp, g), lambda.factorial_weight());
    });
    return total;
}

namespace {

void for_each_sequence(int m, int n, const std::function<void(const IndexSequence &)> &fn) {
    IndexSequence s(static_cast<std::size_t>(n), 1);
    while (true) {
        fn(s);
        int i = n - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == m) {
            s[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) {
            return;
        }
        ++s[static_cast<std::size_t>(i)];
    }
}

}  // namespace

ReorderingSides reordering_identity(int m, int n, const TestFunction &h) {
    if (m < 1 || n < 1 || n > 4 || m > 4) {
        fail_guard("reordering identity check is limited to M <= 4 and length <= 4");
    }
    ReorderingSides sides;
    for_each_sequence(m, n, [&](const IndexSequence &j) {
        for_each_sequence(m, n, [&](const IndexSequence &jp) {
            Rational ind = phase_integral_indicator(j, jp);
            if (ind != 0) {
                sides.lhs += h(j, jp) * ind;
            }
        });
    });
    std::vector<int> perm(static_cast<std::size_t>(n));
    for_each_set_partition(n, [&](const SetPartition &lambda) {
        const int blocks = static_cast<int>(lambda.blocks.size());
        Rational weight(BigInt(1), lambda.factorial_weight());
        for_each_sequence(m, blocks, [&](const IndexSequence &reps) {
            for (int a = 0; a < blocks; ++a) {
                for (int b = a + 1; b < blocks; ++b) {
                    if (reps[static_cast<std::size_t>(a)] == reps[static_cast<std::size_t>(b)]) {
                        return;
                    }
                }
            }
            IndexSequence jl(static_cast<std::size_t>(n));
            for (int b = 0; b < blocks; ++b) {
                for (int f : lambda.blocks[static_cast<std::size_t>(b)]) {
                    jl[static_cast<std::size_t>(f - 1)] = reps[static_cast<std::size_t>(b)];
                }
            }
            std::iota(perm.begin(), perm.end(), 0);
            do {
                sides.rhs += weight * h(jl, Permutation::from_zero_based(perm).act(jl));
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    });
    return sides;
}

BigInt coset_sum_check(const Permutation &rho, int r) {
    const int degree = rho.degree();
    if (degree % 4 != 0 || degree == 0) {
        fail("coset_sum_check needs a permutation of degree 4N");
    }
    const int n2 = degree / 2;
    if (r < 1 || r > 4 || n2 > 4) {
        fail_guard("coset_sum_check brute force is limited to R <= 4 and N <= 2");
    }
    BigInt count = 0;
    for_each_sequence(r, n2, [&](const IndexSequence &mu) {
        IndexSequence mubar;
        for (int x : mu) {
            mubar.push_back(x);
            mubar.push_back(x);
        }
        IndexSequence image = rho.act(mubar);
        for_each_sequence(r, n2, [&](const IndexSequence &nu) {
            for (int a = 0; a < n2; ++a) {
                if (image[static_cast<std::size_t>(2 * a)] != nu[static_cast<std::size_t>(a)] ||
                    image[static_cast<std::size_t>(2 * a + 1)] != nu[static_cast<std::size_t>(a)]) {
                    return;
                }
            }
            ++count;
        });
    });
    return count;
}

}  // namespace gbslxe
