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

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

int rank(const std::vector<ElementSet>& bases, ElementSet a) {
  int best = 0;
  for (ElementSet b : bases) best = std::max(best, (b & a).size());
  return best;
}

std::vector<ElementSet> flats(int groundsize, const std::vector<ElementSet>& bases) {
  std::vector<ElementSet> out;
  for (std::uint32_t s = 0; s < (1u << groundsize); ++s) {
    const ElementSet a(s);
    const int r = rank(bases, a);
    bool closed = true;
    for (int e = 0; e < groundsize && closed; ++e) {
      if (!a.contains(e) && rank(bases, a.with(e)) == r) closed = false;
    }
    if (closed) out.push_back(a);
  }
  return out;
}

std::int64_t mobius(const std::vector<ElementSet>& family) {
  std::vector<ElementSet> sorted = family;
  std::sort(sorted.begin(), sorted.end(), [](ElementSet x, ElementSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::map<ElementSet, std::int64_t> mu;
  const ElementSet bottom = sorted.front();
  for (ElementSet y : sorted) {
    if (y == bottom) {
      mu[y] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& [z, value] : mu) {
      if (z.subset_of(y) && z != y) sum += value;
    }
    mu[y] = -sum;
  }
  return mu[sorted.back()];
}

bool is_matroid(const std::vector<ElementSet>& bases) {
  auto has = [&](ElementSet s) {
    return std::find(bases.begin(), bases.end(), s) != bases.end();
  };
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      for (int a : (b1 - b2).elements()) {
        bool ok = false;
        for (int b : (b2 - b1).elements()) ok = ok || has(b1.without(a).with(b));
        if (!ok) return false;
      }
    }
  }
  return true;
}

bool is_admissible(const GroundSet& gs, const std::vector<ElementSet>& bases) {
  const int m = gs.size();
  std::vector<int> r(1u << m);
  for (std::uint32_t s = 0; s < r.size(); ++s) r[s] = rank(bases, ElementSet(s));
  const int full_rank = r.back();
  auto closure = [&](ElementSet a) {
    for (int e = 0; e < m; ++e) {
      if (r[a.with(e).bits()] == r[a.bits()]) a = a.with(e);
    }
    return a;
  };
  auto independent = [&](ElementSet a) { return r[a.bits()] == a.size(); };
  if (full_rank < 2) return false;
  for (int e = 0; e < m; ++e) {
    const ElementSet atom = closure(ElementSet::singleton(e));
    if (r[ElementSet::singleton(e).bits()] == 0 || !gs.is_admissible(atom)) return false;
  }
  for (std::uint32_t s = 0; s < r.size(); ++s) {
    const ElementSet a(s);
    int derived = 0;
    smk::for_each_subset(a, [&](ElementSet i) {
      if (!gs.is_admissible(i) || !independent(i)) return;
      const ElementSet cl = closure(i);
      if (!gs.is_admissible(cl) && cl != gs.full()) return;
      int value = i.size();
      for (int p = 0; p < gs.n(); ++p) {
        const int x = p, y = p + gs.n();
        if (!a.contains(x) || !a.contains(y) || i.contains(x) || i.contains(y)) continue;
        const ElementSet ix = i.with(x), iy = i.with(y);
        if (independent(ix) && independent(iy) && gs.is_admissible(closure(ix)) &&
            gs.is_admissible(closure(iy))) {
          value = i.size() + 2;
        }
      }
      derived = std::max(derived, value);
    });
    if (derived != r[s]) return false;
  }
  return true;
}

bool is_symplectic(const GroundSet& gs, const std::vector<ElementSet>& family) {
  const int n = gs.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
      // perm[0] (with its sign) is the top; its star is the bottom.
      std::vector<int> level(2 * n);
      for (int t = 0; t < n; ++t) {
        const int top = ((signs >> t) & 1u) ? perm[t] + n : perm[t];
        level[top] = 2 * n - 1 - t;
        level[gs.star(top)] = t;
      }
      auto profile = [&](ElementSet s) {
        std::vector<int> lv;
        for (int e : s.elements()) lv.push_back(level[e]);
        std::sort(lv.rbegin(), lv.rend());
        return lv;
      };
      int maxima = 0;
      for (ElementSet cand : family) {
        const std::vector<int> pc = profile(cand);
        bool dominates = true;
        for (ElementSet other : family) {
          const std::vector<int> po = profile(other);
          for (std::size_t i = 0; i < pc.size(); ++i) dominates = dominates && po[i] <= pc[i];
        }
        maxima += dominates;
      }
      if (maxima != 1) return false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

std::int64_t count_subsets(const std::vector<ElementSet>& family, int k) {
  std::int64_t count = 0;
  const int m = 32 - std::countl_zero(std::accumulate(
                         family.begin(), family.end(), 0u,
                         [](std::uint32_t acc, ElementSet s) { return acc | s.bits(); }));
  for (ElementSet s : smk::k_subsets(m, k)) {
    count += std::any_of(family.begin(), family.end(),
                         [&](ElementSet b) { return s.subset_of(b); });
  }
  return count;
}

std::vector<ElementSet> random_family(const GroundSet& gs, int k, std::mt19937_64& rng) {
  std::vector<ElementSet> pool;
  for (ElementSet s : smk::k_subsets(gs.size(), k)) {
    if (gs.is_admissible(s)) pool.push_back(s);
  }
  std::vector<ElementSet> out;
  while (out.empty()) {
    for (ElementSet s : pool) {
      if (rng() & 1u) out.push_back(s);
    }
  }
  return out;
}

}  // namespace oracle
