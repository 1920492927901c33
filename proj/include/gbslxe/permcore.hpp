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

#ifndef GBSLXE_PERMCORE_HPP
#define GBSLXE_PERMCORE_HPP

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "gbslxe/common.hpp"

namespace gbslxe {

/// Sequence of positive integer labels (index values or abstract labels).
using IndexSequence = std::vector<int>;

/// A bijection on {0..m-1}, stored 0-based. Factories and accessors that face
/// users take 1-based one-line or cycle notation.
///
/// Acting on a sequence follows the position convention
///     p(g)[a] = g[p(a)],
/// so the 8-cycle (1 2 3 4 5 6 7 8) rotates (g1,...,g8) into (g2,...,g8,g1).
class Permutation {
   public:
    Permutation() = default;

    static Permutation identity(int m);
    /// 1-based one-line form; throws if not a bijection on {1..m}.
    static Permutation from_one_line(const std::vector<int> &one_based);
    /// 1-based cycle notation on m points; unspecified points are fixed.
    static Permutation from_cycles(int m, std::initializer_list<std::initializer_list<int>> cycles);
    static Permutation from_cycles(int m, const std::vector<std::vector<int>> &cycles);
    /// Takes an already validated 0-based map.
    static Permutation from_zero_based(std::vector<int> map);

    int degree() const { return static_cast<int>(map_.size()); }
    /// 0-based image of 0-based point i.
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    std::span<const int> zero_based() const { return map_; }
    std::vector<int> one_line() const;

    Permutation inverse() const;
    /// Function composition: (p * q)(i) = p(q(i)).
    Permutation operator*(const Permutation &q) const;
    /// Direct sum: q acts on the points shifted past this permutation.
    Permutation direct_sum(const Permutation &q) const;
    bool is_identity() const;

    /// p(g)[a] = g[p(a)].
    IndexSequence act(const IndexSequence &g) const;

    bool operator==(const Permutation &o) const = default;

   private:
    explicit Permutation(std::vector<int> map) : map_(std::move(map)) {}
    std::vector<int> map_;
};

/// Cycles as 1-based position lists, each starting at its smallest element,
/// ordered by that element. Fixed points appear as 1-cycles.
std::vector<std::vector<int>> cycle_decomposition(const Permutation &p);
int cycle_count(std::span<const int> zero_based_map);

/// Minimum number of transpositions: m - #cycles.
int transposition_norm(const Permutation &p);

/// Möbius function: product over cycles of Cat(|c|-1) (-1)^{|c|-1}.
Rational moebius(const Permutation &p);
BigInt catalan(unsigned n);

/// Weakly decreasing positive parts.
struct IntegerPartition {
    std::vector<int> parts;
    int total() const;
    bool operator==(const IntegerPartition &o) const = default;
};

struct CosetType {
    IntegerPartition eta;
    int length = 0;
};

/// Coset type of p in S_{2m}: components of the graph on {1..2m} with edges
/// {2k-1,2k} and {p(2k-1),p(2k)}. Component of 2e edges contributes part e.
CosetType coset_type(const Permutation &p);
/// Number of components only; allocation-free hot path for the counting code.
int coset_type_length(std::span<const int> zero_based_map);
bool is_hyperoctahedral(const Permutation &p);

/// k = (k_1,...,k_N) with sum a*k_a = N.
class ConstrainedComposition {
   public:
    /// Throws if the constraint is violated.
    explicit ConstrainedComposition(std::vector<int> parts);

    int half_size() const { return static_cast<int>(parts_.size()); }
    const std::vector<int> &parts() const { return parts_; }
    /// k_a for 1-based a.
    int part(int a) const { return parts_[static_cast<std::size_t>(a - 1)]; }
    /// v_a = sum_{p<=a} p k_p, with v_0 = 0.
    int v(int a) const;

    bool operator==(const ConstrainedComposition &o) const = default;

   private:
    std::vector<int> parts_;
};

/// All k with sum a*k_a = N in descending lexicographic order of parts,
/// e.g. N=3 gives (3,0,0), (1,1,0), (0,0,1). N=0 gives one empty composition.
std::vector<ConstrainedComposition> constrained_compositions(int half_size);

/// Block-rotation permutation of degree 2N: block a of size 2a acts by
/// (g_1,...,g_2a) -> (g_2,...,g_2a,g_1), blocks laid out by increasing a.
Permutation omega_permutation(const ConstrainedComposition &k);

/// Set partition of {1..n}; blocks sorted by smallest element, each sorted.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
    /// prod |block|!
    BigInt factorial_weight() const;
};

/// Visits every set partition of {1..n} once (restricted-growth order).
void for_each_set_partition(int n, const std::function<void(const SetPartition &)> &fn);
std::vector<SetPartition> set_partitions(int n);
BigInt bell_number(int n);

/// Visits all rho with rho(g) = h under the position convention, i.e.
/// h[a] = g[rho(a)], by matching positions value by value. The callback gets
/// the 0-based map; it is only valid for the duration of the call.
/// Throws on length mismatch; visits nothing if the multisets differ.
void for_each_matcher(const IndexSequence &g, const IndexSequence &h,
                      const std::function<void(std::span<const int>)> &fn);
std::vector<Permutation> enumerate_matchers(const IndexSequence &g, const IndexSequence &h);
/// prod over values of multiplicity!, or 0 when the multisets differ.
BigInt matcher_count(const IndexSequence &g, const IndexSequence &h);

/// Concatenation g ⊕ h.
IndexSequence concat(const IndexSequence &g, const IndexSequence &h);

}  // namespace gbslxe

#endif
