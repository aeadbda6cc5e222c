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

#include "smk/ortho.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "smk/geometry.hpp"

namespace smk {

bool is_orthogonal(const GroundSet& gs, std::span<const ElementSet> bases) {
  if (bases.empty()) return false;
  for (const AdmissibleOrder& order :
       enumerate_admissible_orders(gs, OrderKind::D)) {
    if (!gale_maximum(order, bases)) return false;
  }
  return true;
}

bool parity_check(const GroundSet& gs, std::span<const ElementSet> bases) {
  const ElementSet starred = gs.full() - ElementSet::prefix(gs.n());
  std::set<int> parities;
  for (ElementSet b : bases) parities.insert((b & starred).size() % 2);
  return parities.size() <= 1;
}

bool envelope_theorem_check(const OrthogonalMatroid& b) {
  const Matroid env = minimal_enveloping(b.ground, b.bases);
  std::vector<ElementSet> admissible;
  for (ElementSet x : env.bases()) {
    if (b.ground.is_admissible(x)) admissible.push_back(x);
  }
  return admissible == b.bases;
}

std::vector<OrthogonalMatroid> enumerate_lagrangian(int n, int samples,
                                                    std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const GroundSet gs(n);
  std::vector<ElementSet> transversals;
  for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
    transversals.emplace_back((ElementSet::prefix(n).bits() & ~signs) |
                              (signs << n));
  }
  std::sort(transversals.begin(), transversals.end());
  const std::size_t t = transversals.size();
  auto family = [&](std::uint64_t pick) {
    std::vector<ElementSet> out;
    for (std::size_t i = 0; i < t; ++i) {
      if ((pick >> i) & 1u) out.push_back(transversals[i]);
    }
    return out;
  };
  std::vector<OrthogonalMatroid> out;
  if (n <= 3) {
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << t); ++pick) {
      std::vector<ElementSet> f = family(pick);
      if (is_orthogonal(gs, f)) out.push_back({gs, std::move(f)});
    }
    return out;
  }
  if (t >= 64) throw std::invalid_argument("n too large for sampling");
  // Uniform subsets of all transversals are almost never orthogonal, so
  // samples are drawn inside one parity class.
  std::vector<std::uint64_t> parity_mask(2, 0);
  for (std::size_t i = 0; i < t; ++i) {
    const int starred = (transversals[i] - ElementSet::prefix(n)).size();
    parity_mask[starred % 2] |= std::uint64_t{1} << i;
  }
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> seen;
  for (int s = 0; s < samples; ++s) {
    const std::uint64_t pick = rng() & parity_mask[rng() & 1u];
    if (pick == 0 || !seen.insert(pick).second) continue;
    std::vector<ElementSet> f = family(pick);
    if (is_orthogonal(gs, f)) out.push_back({gs, std::move(f)});
  }
  return out;
}

SymplecticVerdicts orthogonal_is_symplectic(const OrthogonalMatroid& b) {
  return {is_symplectic(b.ground, b.bases),
          gelfand_serganova_check(b.ground, b.bases)};
}

}  // namespace smk
