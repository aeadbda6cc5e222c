// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SMK_GROUNDSET_HPP_
#define SMK_GROUNDSET_HPP_

#include <Eigen/Core>

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace smk {

// Bitmask over a ground set of at most 32 elements.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(int e) { return ElementSet(1u << e); }
  // {0, ..., m-1}
  static constexpr ElementSet prefix(int m) {
    return ElementSet(m >= 32 ? ~0u : ((1u << m) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (1u << e)); }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~(1u << e));
  }
  // Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const { return s.bits(); }
};

// Calls f(sub) for every subset of `set`, including the empty set and `set`.
template <typename F>
void for_each_subset(ElementSet set, F&& f) {
  std::uint32_t s = set.bits();
  std::uint32_t sub = s;
  while (true) {
    f(ElementSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
}

// All k-subsets of {0, ..., m-1} in increasing bit order.
std::vector<ElementSet> k_subsets(int m, int k);

// The signed ground set J = [n] ⊔ [n]*. Element i (1-based) is stored at
// index i-1 and i* at index n+i-1.
class GroundSet {
 public:
  static constexpr int kMaxPairs = 16;

  explicit GroundSet(int n);

  int n() const { return n_; }
  int size() const { return 2 * n_; }
  ElementSet full() const { return ElementSet::prefix(2 * n_); }

  int star(int e) const { return e < n_ ? e + n_ : e - n_; }
  ElementSet star(ElementSet a) const;
  // Index in [0, n) of the pair {i, i*} containing e.
  int pair_index(int e) const { return e < n_ ? e : e - n_; }
  ElementSet pair(int i) const {
    return ElementSet::singleton(i).with(i + n_);
  }
  // +1 for unstarred elements, -1 for starred ones.
  int sign(int e) const { return e < n_ ? 1 : -1; }

  // Pairs {i, i*} meeting a.
  ElementSet pair_closure(ElementSet a) const { return a | star(a); }
  int pairs_touched(ElementSet a) const;

  bool is_admissible(ElementSet a) const { return !a.intersects(star(a)); }
  bool is_totally_inadmissible(ElementSet a) const { return a == star(a); }
  bool is_transversal(ElementSet a, ElementSet scope) const {
    return is_admissible(a) && scope.subset_of(a | star(a));
  }

  // e_A in Z^{2n}.
  Eigen::VectorXi unsigned_vector(ElementSet a) const;
  // e^±_A in Z^n; throws std::invalid_argument unless a is admissible.
  Eigen::VectorXi signed_vector(ElementSet a) const;

  // JSON codes: +i for i, -i for i*.
  int encode(int e) const { return e < n_ ? e + 1 : -(e - n_ + 1); }
  // Throws std::invalid_argument on 0 or |code| > n.
  int decode(int code) const;
  ElementSet decode_set(std::span<const int> codes) const;
  std::vector<int> encode_set(ElementSet a) const;

  std::string name(int e) const;
  std::string format(ElementSet a) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
};

enum class OrderKind { C, D };

// An admissible order on J. Elements are compared through integer levels:
// x < y iff level(x) < level(y). C orders have distinct levels; D orders
// give the unrelated pair the same level, so those two are incomparable.
class AdmissibleOrder {
 public:
  AdmissibleOrder(OrderKind kind, std::vector<int> levels);

  OrderKind kind() const { return kind_; }
  int level(int e) const { return levels_[e]; }
  const std::vector<int>& levels() const { return levels_; }
  bool less(int x, int y) const { return levels_[x] < levels_[y]; }
  bool leq(int x, int y) const { return x == y || less(x, y); }

  // Elements from the top of the order downwards (ties broken by index).
  std::vector<int> top_down() const;

  friend bool operator==(const AdmissibleOrder&, const AdmissibleOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<int> levels_;
};

// Every admissible order of the requested kind, each exactly once.
// C: 2^n n! orders. D: 2^(n-1) n! orders.
std::vector<AdmissibleOrder> enumerate_admissible_orders(const GroundSet& gs,
                                                         OrderKind kind);

// Gale order on equicardinal sets: a <= b iff some bijection phi: a -> b has
// x <= phi(x) for all x. For total orders this is the sorted comparison.
bool gale_leq(const AdmissibleOrder& order, ElementSet a, ElementSet b);

// The basis that dominates every other member in the Gale order, if any.
std::optional<ElementSet> gale_maximum(const AdmissibleOrder& order,
                                       std::span<const ElementSet> family);

}  // namespace smk

#endif  // SMK_GROUNDSET_HPP_
