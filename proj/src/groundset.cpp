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

#include "smk/groundset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace smk {

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::vector<ElementSet> k_subsets(int m, int k) {
  std::vector<ElementSet> out;
  if (k < 0 || k > m) return out;
  const std::uint32_t limit = m >= 32 ? 0 : (1u << m);
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (std::popcount(s) == k) out.emplace_back(s);
  }
  return out;
}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 0 || n > kMaxPairs) {
    throw std::invalid_argument("GroundSet: n out of range");
  }
}

ElementSet GroundSet::star(ElementSet a) const {
  const std::uint32_t low = a.bits() & ((1u << n_) - 1u);
  const std::uint32_t high = a.bits() >> n_;
  return ElementSet((low << n_) | high);
}

int GroundSet::pairs_touched(ElementSet a) const {
  const std::uint32_t low = a.bits() & ((1u << n_) - 1u);
  return std::popcount(low | (a.bits() >> n_));
}

Eigen::VectorXi GroundSet::unsigned_vector(ElementSet a) const {
  Eigen::VectorXi v = Eigen::VectorXi::Zero(size());
  for (int e : a.elements()) v(e) = 1;
  return v;
}

Eigen::VectorXi GroundSet::signed_vector(ElementSet a) const {
  if (!is_admissible(a)) {
    throw std::invalid_argument("signed_vector: set " + format(a) +
                                " is not admissible");
  }
  Eigen::VectorXi v = Eigen::VectorXi::Zero(n_);
  for (int e : a.elements()) v(pair_index(e)) = sign(e);
  return v;
}

int GroundSet::decode(int code) const {
  if (code == 0 || code > n_ || code < -n_) {
    throw std::invalid_argument("element code " + std::to_string(code) +
                                " outside [-" + std::to_string(n_) + ", " +
                                std::to_string(n_) + "] \\ {0}");
  }
  return code > 0 ? code - 1 : n_ + (-code) - 1;
}

ElementSet GroundSet::decode_set(std::span<const int> codes) const {
  ElementSet out;
  for (int c : codes) {
    const int e = decode(c);
    if (out.contains(e)) {
      throw std::invalid_argument("duplicate element code " + std::to_string(c));
    }
    out = out.with(e);
  }
  return out;
}

std::vector<int> GroundSet::encode_set(ElementSet a) const {
  std::vector<int> out;
  for (int e : a.elements()) out.push_back(encode(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::string GroundSet::name(int e) const {
  return e < n_ ? std::to_string(e + 1) : std::to_string(e - n_ + 1) + "*";
}

std::string GroundSet::format(ElementSet a) const {
  std::string out = "{";
  bool first = true;
  for (int e : a.elements()) {
    if (!first) out += ",";
    out += name(e);
    first = false;
  }
  return out + "}";
}

AdmissibleOrder::AdmissibleOrder(OrderKind kind, std::vector<int> levels)
    : kind_(kind), levels_(std::move(levels)) {}

std::vector<int> AdmissibleOrder::top_down() const {
  std::vector<int> out(levels_.size());
  std::iota(out.begin(), out.end(), 0);
  std::stable_sort(out.begin(), out.end(),
                   [&](int x, int y) { return levels_[x] > levels_[y]; });
  return out;
}

namespace {

// Calls f(seq) for every ordered admissible selection of one element from
// each pair in `pairs` (|pairs|! * 2^|pairs| sequences).
template <typename F>
void for_each_signed_permutation(const GroundSet& gs, std::vector<int> pairs,
                                 F&& f) {
  std::sort(pairs.begin(), pairs.end());
  const int m = static_cast<int>(pairs.size());
  std::vector<int> seq(m);
  do {
    for (std::uint32_t signs = 0; signs < (1u << m); ++signs) {
      for (int t = 0; t < m; ++t) {
        seq[t] = ((signs >> t) & 1u) ? pairs[t] + gs.n() : pairs[t];
      }
      f(seq);
    }
  } while (std::next_permutation(pairs.begin(), pairs.end()));
}

}  // namespace

std::vector<AdmissibleOrder> enumerate_admissible_orders(const GroundSet& gs,
                                                         OrderKind kind) {
  const int n = gs.n();
  std::vector<AdmissibleOrder> out;
  if (kind == OrderKind::C) {
    std::vector<int> pairs(n);
    std::iota(pairs.begin(), pairs.end(), 0);
    for_each_signed_permutation(gs, pairs, [&](const std::vector<int>& top) {
      std::vector<int> levels(2 * n);
      for (int t = 0; t < n; ++t) {
        levels[top[t]] = 2 * n - 1 - t;
        levels[gs.star(top[t])] = t;
      }
      out.emplace_back(OrderKind::C, std::move(levels));
    });
    return out;
  }
  for (int free_pair = 0; free_pair < n; ++free_pair) {
    std::vector<int> pairs;
    for (int i = 0; i < n; ++i) {
      if (i != free_pair) pairs.push_back(i);
    }
    for_each_signed_permutation(gs, pairs, [&](const std::vector<int>& top) {
      std::vector<int> levels(2 * n);
      const int m = static_cast<int>(top.size());
      for (int t = 0; t < m; ++t) {
        levels[top[t]] = 2 * n - 2 - t;
        levels[gs.star(top[t])] = t;
      }
      levels[free_pair] = n - 1;
      levels[free_pair + n] = n - 1;
      out.emplace_back(OrderKind::D, std::move(levels));
    });
  }
  return out;
}

namespace {

bool augment(int x, const std::vector<std::vector<int>>& adj,
             std::vector<int>& match_right, std::vector<char>& seen) {
  for (int y : adj[x]) {
    if (seen[y]) continue;
    seen[y] = 1;
    if (match_right[y] < 0 || augment(match_right[y], adj, match_right, seen)) {
      match_right[y] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

bool gale_leq(const AdmissibleOrder& order, ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return false;
  const std::vector<int> left = a.elements();
  const std::vector<int> right = b.elements();
  const int k = static_cast<int>(left.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (order.leq(left[i], right[j])) adj[i].push_back(j);
    }
  }
  std::vector<int> match_right(k, -1);
  for (int i = 0; i < k; ++i) {
    std::vector<char> seen(k, 0);
    if (!augment(i, adj, match_right, seen)) return false;
  }
  return true;
}

std::optional<ElementSet> gale_maximum(const AdmissibleOrder& order,
                                       std::span<const ElementSet> family) {
  if (family.empty()) return std::nullopt;
  if (order.kind() == OrderKind::C) {
    // Total order: compare descending level vectors componentwise.
    auto profile = [&](ElementSet s) {
      std::vector<int> lv;
      for (int e : s.elements()) lv.push_back(order.level(e));
      std::sort(lv.rbegin(), lv.rend());
      return lv;
    };
    std::vector<int> best = profile(family.front());
    for (ElementSet s : family.subspan(1)) {
      const std::vector<int> p = profile(s);
      if (p.size() != best.size()) return std::nullopt;
      for (std::size_t i = 0; i < p.size(); ++i) best[i] = std::max(best[i], p[i]);
    }
    for (ElementSet s : family) {
      if (profile(s) == best) return s;
    }
    return std::nullopt;
  }
  for (ElementSet candidate : family) {
    const bool dominates = std::all_of(
        family.begin(), family.end(),
        [&](ElementSet other) { return gale_leq(order, other, candidate); });
    if (dominates) return candidate;
  }
  return std::nullopt;
}

}  // namespace smk
