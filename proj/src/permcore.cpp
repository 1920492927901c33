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

#include "gbslxe/permcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace gbslxe {

namespace {

bool is_bijection(const std::vector<int> &map) {
    std::vector<char> seen(map.size(), 0);
    for (int v : map) {
        if (v < 0 || static_cast<std::size_t>(v) >= map.size() || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

struct DisjointSets {
    // Small fixed-capacity union-find; degrees here never exceed 64.
    int parent[64];
    explicit DisjointSets(int n) {
        for (int i = 0; i < n; ++i) {
            parent[i] = i;
        }
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[a] = b;
        return true;
    }
};

}  // namespace

Permutation Permutation::identity(int m) {
    if (m < 0) {
        fail("permutation degree must be non-negative");
    }
    std::vector<int> map(static_cast<std::size_t>(m));
    std::iota(map.begin(), map.end(), 0);
    return Permutation(std::move(map));
}

Permutation Permutation::from_one_line(const std::vector<int> &one_based) {
    std::vector<int> map;
    map.reserve(one_based.size());
    for (int v : one_based) {
        map.push_back(v - 1);
    }
    if (!is_bijection(map)) {
        fail("one-line form is not a bijection on {1..m}");
    }
    return Permutation(std::move(map));
}

Permutation Permutation::from_cycles(int m, std::initializer_list<std::initializer_list<int>> cycles) {
    std::vector<std::vector<int>> cs;
    for (const auto &c : cycles) {
        cs.emplace_back(c);
    }
    return from_cycles(m, cs);
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>> &cycles) {
    auto p = identity(m);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (const auto &c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int from = c[i] - 1;
            int to = c[(i + 1) % c.size()] - 1;
            if (from < 0 || from >= m || to < 0 || to >= m || used[static_cast<std::size_t>(from)]) {
                fail("invalid cycle notation");
            }
            used[static_cast<std::size_t>(from)] = 1;
            p.map_[static_cast<std::size_t>(from)] = to;
        }
    }
    return p;
}

Permutation Permutation::from_zero_based(std::vector<int> map) {
    if (!is_bijection(map)) {
        fail("map is not a bijection");
    }
    return Permutation(std::move(map));
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out;
    out.reserve(map_.size());
    for (int v : map_) {
        out.push_back(v + 1);
    }
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation &q) const {
    if (q.degree() != degree()) {
        fail("composition of permutations of different degree");
    }
    std::vector<int> out(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        out[i] = map_[static_cast<std::size_t>(q.map_[i])];
    }
    return Permutation(std::move(out));
}

Permutation Permutation::direct_sum(const Permutation &q) const {
    std::vector<int> out = map_;
    int shift = degree();
    for (int v : q.map_) {
        out.push_back(v + shift);
    }
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

IndexSequence Permutation::act(const IndexSequence &g) const {
    if (g.size() != map_.size()) {
        fail("sequence length does not match permutation degree");
    }
    IndexSequence out(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) {
        out[a] = g[static_cast<std::size_t>(map_[a])];
    }
    return out;
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation &p) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
    for (int start = 0; start < p.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        std::vector<int> cycle;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
            seen[static_cast<std::size_t>(x)] = 1;
            cycle.push_back(x + 1);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

int cycle_count(std::span<const int> map) {
    std::vector<char> seen(map.size(), 0);
    int count = 0;
    for (std::size_t start = 0; start < map.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        ++count;
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(map[x])) {
            seen[x] = 1;
        }
    }
    return count;
}

int transposition_norm(const Permutation &p) { return p.degree() - cycle_count(p.zero_based()); }

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

Rational moebius(const Permutation &p) {
    BigInt value = 1;
    for (const auto &c : cycle_decomposition(p)) {
        unsigned len = static_cast<unsigned>(c.size());
        value *= catalan(len - 1);
        if ((len - 1) % 2 == 1) {
            value = -value;
        }
    }
    return Rational(value);
}

int IntegerPartition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int coset_type_length(std::span<const int> map) {
    int n = static_cast<int>(map.size());
    if (n % 2 != 0) {
        fail("coset type requires even degree");
    }
    if (n > 64) {
        fail("coset type degree above 64 is not supported");
    }
    DisjointSets sets(n);
    int components = n;
    for (int k = 0; k < n; k += 2) {
        components -= sets.unite(k, k + 1) ? 1 : 0;
        components -= sets.unite(map[static_cast<std::size_t>(k)], map[static_cast<std::size_t>(k + 1)]) ? 1 : 0;
    }
    return components;
}

CosetType coset_type(const Permutation &p) {
    auto map = p.zero_based();
    int n = p.degree();
    coset_type_length(map);  // validates degree
    DisjointSets sets(n);
    for (int k = 0; k < n; k += 2) {
        sets.unite(k, k + 1);
        sets.unite(map[static_cast<std::size_t>(k)], map[static_cast<std::size_t>(k + 1)]);
    }
    std::map<int, int> sizes;
    for (int v = 0; v < n; ++v) {
        ++sizes[sets.find(v)];
    }
    CosetType out;
    for (const auto &[root, size] : sizes) {
        out.eta.parts.push_back(size / 2);
    }
    std::sort(out.eta.parts.rbegin(), out.eta.parts.rend());
    out.length = static_cast<int>(out.eta.parts.size());
    return out;
}

bool is_hyperoctahedral(const Permutation &p) { return coset_type_length(p.zero_based()) == p.degree() / 2; }

ConstrainedComposition::ConstrainedComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    int total = 0;
    for (std::size_t a = 0; a < parts_.size(); ++a) {
        if (parts_[a] < 0) {
            fail("composition parts must be non-negative");
        }
        total += static_cast<int>(a + 1) * parts_[a];
    }
    if (total != static_cast<int>(parts_.size())) {
        fail("composition violates sum a*k_a = N (got " + std::to_string(total) + ", N = " +
             std::to_string(parts_.size()) + ")");
    }
}

int ConstrainedComposition::v(int a) const {
    int total = 0;
    for (int p = 1; p <= a; ++p) {
        total += p * part(p);
    }
    return total;
}

std::vector<ConstrainedComposition> constrained_compositions(int half_size) {
    if (half_size < 0) {
        fail("N must be non-negative");
    }
    std::vector<ConstrainedComposition> out;
    std::vector<int> parts(static_cast<std::size_t>(half_size), 0);
    // Assign k_1 first, largest values first, which yields descending
    // lexicographic order on the parts vector.
    std::function<void(int, int)> rec = [&](int a, int remaining) {
        if (a > half_size) {
            if (remaining == 0) {
                out.emplace_back(parts);
            }
            return;
        }
        for (int k = remaining / a; k >= 0; --k) {
            parts[static_cast<std::size_t>(a - 1)] = k;
            rec(a + 1, remaining - a * k);
        }
        parts[static_cast<std::size_t>(a - 1)] = 0;
    };
    rec(1, half_size);
    return out;
}

Permutation omega_permutation(const ConstrainedComposition &k) {
    int n = k.half_size();
    std::vector<int> map(static_cast<std::size_t>(2 * n));
    for (int a = 1; a <= n; ++a) {
        for (int p = 1; p <= k.part(a); ++p) {
            int offset = 2 * k.v(a - 1) + 2 * a * (p - 1);
            for (int i = 0; i < 2 * a; ++i) {
                map[static_cast<std::size_t>(offset + i)] = offset + (i + 1) % (2 * a);
            }
        }
    }
    return Permutation::from_zero_based(std::move(map));
}

BigInt SetPartition::factorial_weight() const {
    BigInt w = 1;
    for (const auto &b : blocks) {
        w *= factorial(static_cast<unsigned>(b.size()));
    }
    return w;
}

void for_each_set_partition(int n, const std::function<void(const SetPartition &)> &fn) {
    if (n < 1) {
        fail("set partitions need n >= 1");
    }
    std::vector<int> growth(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    SetPartition part;
    part.n = n;
    while (true) {
        int blocks = prefix_max.back() + 1;
        part.blocks.assign(static_cast<std::size_t>(blocks), {});
        for (int i = 0; i < n; ++i) {
            part.blocks[static_cast<std::size_t>(growth[static_cast<std::size_t>(i)])].push_back(i + 1);
        }
        fn(part);
        // Next restricted growth string.
        int i = n - 1;
        while (i > 0 && growth[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++growth[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] =
            std::max(prefix_max[static_cast<std::size_t>(i - 1)], growth[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            growth[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
}

std::vector<SetPartition> set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition &p) { out.push_back(p); });
    return out;
}

BigInt bell_number(int n) {
    // Bell triangle.
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto &x : row) {
            next.push_back(next.back() + x);
        }
        row = std::move(next);
    }
    return row.front();
}

namespace {

struct ValueGroup {
    std::vector<int> target_positions;  // positions a in h
    std::vector<int> source_positions;  // positions in g, permuted during the walk
};

bool build_groups(const IndexSequence &g, const IndexSequence &h, std::vector<ValueGroup> &groups) {
    if (g.size() != h.size()) {
        fail("matcher sequences must have equal length");
    }
    std::map<int, ValueGroup> by_value;
    for (std::size_t a = 0; a < h.size(); ++a) {
        by_value[h[a]].target_positions.push_back(static_cast<int>(a));
    }
    for (std::size_t a = 0; a < g.size(); ++a) {
        auto it = by_value.find(g[a]);
        if (it == by_value.end()) {
            return false;
        }
        it->second.source_positions.push_back(static_cast<int>(a));
    }
    for (auto &[value, group] : by_value) {
        if (group.source_positions.size() != group.target_positions.size()) {
            return false;
        }
        groups.push_back(std::move(group));
    }
    return true;
}

void walk_groups(std::vector<ValueGroup> &groups, std::size_t gi, std::vector<int> &map,
                 const std::function<void(std::span<const int>)> &fn) {
    if (gi == groups.size()) {
        fn(map);
        return;
    }
    auto &group = groups[gi];
    std::sort(group.source_positions.begin(), group.source_positions.end());
    do {
        for (std::size_t t = 0; t < group.target_positions.size(); ++t) {
            map[static_cast<std::size_t>(group.target_positions[t])] = group.source_positions[t];
        }
        walk_groups(groups, gi + 1, map, fn);
    } while (std::next_permutation(group.source_positions.begin(), group.source_positions.end()));
}

}  // namespace

void for_each_matcher(const IndexSequence &g, const IndexSequence &h,
                      const std::function<void(std::span<const int>)> &fn) {
    std::vector<ValueGroup> groups;
    if (!build_groups(g, h, groups)) {
        return;
    }
    std::vector<int> map(g.size(), 0);
    walk_groups(groups, 0, map, fn);
}

std::vector<Permutation> enumerate_matchers(const IndexSequence &g, const IndexSequence &h) {
    std::vector<Permutation> out;
    for_each_matcher(g, h, [&](std::span<const int> map) {
        out.push_back(Permutation::from_zero_based(std::vector<int>(map.begin(), map.end())));
    });
    return out;
}

BigInt matcher_count(const IndexSequence &g, const IndexSequence &h) {
    std::vector<ValueGroup> groups;
    if (!build_groups(g, h, groups)) {
        return 0;
    }
    BigInt count = 1;
    for (const auto &group : groups) {
        count *= factorial(static_cast<unsigned>(group.target_positions.size()));
    }
    return count;
}

IndexSequence concat(const IndexSequence &g, const IndexSequence &h) {
    IndexSequence out = g;
    out.insert(out.end(), h.begin(), h.end());
    return out;
}

}  // namespace gbslxe
