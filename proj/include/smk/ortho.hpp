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

// Lagrangian orthogonal matroids: admissible n-sets with a unique Gale
// maximum under every D_n order.

#ifndef SMK_ORTHO_HPP_
#define SMK_ORTHO_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "smk/sympcore.hpp"

namespace smk {

struct OrthogonalMatroid {
  GroundSet ground;
  std::vector<ElementSet> bases;  // sorted
};

bool is_orthogonal(const GroundSet& gs, std::span<const ElementSet> bases);

// All bases have the same parity of starred elements.
bool parity_check(const GroundSet& gs, std::span<const ElementSet> bases);

// Runs minimal_enveloping and confirms the admissible bases of the result
// are the input. NotFound and MultipleMinima propagate.
bool envelope_theorem_check(const OrthogonalMatroid& b);

// Exhaustive for n <= 3; for larger n, `samples` random families drawn from
// one parity class of transversals with a seeded generator.
std::vector<OrthogonalMatroid> enumerate_lagrangian(int n, int samples = 0,
                                                    std::uint64_t seed = 0);

struct SymplecticVerdicts {
  bool by_orders = false;    // C-order Gale maxima
  bool by_polytope = false;  // edge directions
};
SymplecticVerdicts orthogonal_is_symplectic(const OrthogonalMatroid& b);

}  // namespace smk

#endif  // SMK_ORTHO_HPP_
