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

// Bergman fans as order complexes of proper flats, with unimodularity,
// refinement and Minkowski-weight computations.

#ifndef SMK_FAN_HPP_
#define SMK_FAN_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smk/linalg.hpp"
#include "smk/sympcore.hpp"

namespace smk {

// A cone is a strictly increasing chain of proper nonempty flats.
struct Cone {
  std::vector<ElementSet> chain;
  int dim() const { return static_cast<int>(chain.size()); }
  friend bool operator==(const Cone&, const Cone&) = default;
};

class Fan {
 public:
  enum class Kind { kSymplectic, kOrdinary };

  // Cones of every dimension over the chains of `proper_flats` (which must
  // be closed under the chain condition used by the caller).
  Fan(GroundSet gs, Kind kind, std::vector<ElementSet> proper_flats);

  Kind kind() const { return kind_; }
  const GroundSet& ground() const { return gs_; }
  // n for symplectic fans, 2n for ordinary ones (taken modulo e_J).
  int ambient() const;
  int top_dim() const { return static_cast<int>(cones_.size()) - 1; }
  const std::vector<Cone>& cones(int k) const { return cones_[k]; }
  const std::vector<ElementSet>& rays() const { return flats_; }
  std::vector<Cone> maximal_cones() const;

  // e^±_F or e_F.
  QVector ray(ElementSet flat) const;
  // Ray generators as columns.
  QMatrix generators(const Cone& c) const;
  // Generators plus e_J for ordinary fans.
  QMatrix span_matrix(const Cone& c) const;
  // Index of the cone in cones(c.dim()).
  int index_of(const Cone& c) const;

 private:
  GroundSet gs_;
  Kind kind_;
  std::vector<ElementSet> flats_;
  std::vector<std::vector<Cone>> cones_;
  std::vector<std::map<std::vector<std::uint32_t>, int>> index_;
};

Fan bergman_fan(const RankedSympMatroid& s);
// Proper nonempty flats of m; realized in Q^{2n} modulo e_J.
Fan bergman_fan_ordinary(const GroundSet& gs, const Matroid& m);

// Every cone's primitive generators extend to a lattice basis of the
// saturation of their span (all elementary divisors 1).
bool unimodularity_check(const Fan& fan);

// Maximal cones meet along the cone of their common flats.
bool fan_intersection_check(const Fan& fan);

// env maps each cone of B(env) onto the cone of its admissible prefix, and
// these images are exactly the cones of B(S).
bool env_fan_check(const RankedSympMatroid& s);

// For every maximal cone the face of P(S) selected by interior points is
// constant across `samples` random interior points.
bool refinement_check(const RankedSympMatroid& s, int samples,
                      std::uint64_t seed);

// M_nu is loopless iff nu lies in the support of B(M), tested on ray sums of
// every cone and on `samples` random integer vectors.
bool loopless_face_check(const GroundSet& gs, const Matroid& m, int samples,
                         std::uint64_t seed);

using WeightVector = std::vector<std::int64_t>;

// c indexes fan.cones(k).
bool balancing_check(const Fan& fan, const WeightVector& c, int k);

struct MinkowskiWeights {
  int rank = 0;
  std::vector<WeightVector> generators;  // primitive integer kernel basis
};
MinkowskiWeights mw_group(const Fan& fan, int k);

struct TypeClasses {
  // Component id of each maximal cone.
  std::vector<int> rank_classes;
  int rank_class_count = 0;
  // Components of the graph of type-1 and type-2 moves.
  std::vector<int> move_classes;
  int move_class_count = 0;
  // Pairs of maximal-cone indices related by a type-1 or type-2 move.
  std::vector<std::pair<int, int>> type_pairs;
};
enum class TypeTarget { kD, kDPlus1 };
// Maximal cones (in fan.cones(top_dim()) order) joined when the envelope
// rank of (F u F*) n (G u G*) equals the target, F and G the top flats.
TypeClasses type_classes(const RankedSympMatroid& s, const Fan& fan,
                         TypeTarget target);

// If some proper flat of L(S) is a transversal of J, the top-dimensional
// Minkowski weights have rank 1. Vacuously true otherwise.
bool transversal_flat_check(const RankedSympMatroid& s);

// Maximal cones are connected through shared codimension-one faces.
bool codim_one_connected(const Fan& fan);

}  // namespace smk

#endif  // SMK_FAN_HPP_
