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

// Matroid polytopes over the rationals, their H-descriptions, and face
// matroids.

#ifndef SMK_GEOMETRY_HPP_
#define SMK_GEOMETRY_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smk/linalg.hpp"
#include "smk/sympcore.hpp"

namespace smk {

// (x_1 - x_1*, ..., x_n - x_n*)
QVector env_map(const QVector& v);

// Vertices are the columns of `vertices`, in basis order.
struct VPolytope {
  QMatrix vertices;
  int ambient() const { return static_cast<int>(vertices.rows()); }
  int count() const { return static_cast<int>(vertices.cols()); }
};

// Convex hull of e^±_B over the (admissible) bases.
VPolytope symplectic_polytope(const GroundSet& gs,
                              std::span<const ElementSet> bases);
inline VPolytope polytope(const RankedSympMatroid& s) {
  return symplectic_polytope(s.ground(), s.bases());
}
// Convex hull of e_B in Q^groundsize.
VPolytope polytope(const Matroid& m);

// Affine dimension.
int dim(const VPolytope& p);
// No vertex lies in the hull of the others.
bool is_irredundant(const VPolytope& p);
std::vector<std::pair<int, int>> edges(const VPolytope& p);

// Every edge of the polytope is parallel to some e^±_i - e^±_j, i.e. to a
// coordinate vector or to e_i ± e_j.
bool gelfand_serganova_check(const GroundSet& gs,
                             std::span<const ElementSet> bases);

struct EnvMembership {
  bool predicted = false;  // closure(B - {a,a*}) is not a transversal
  bool actual = false;     // env(e_B) lies in P(S)
};
// B must be a basis of env containing exactly one pair.
EnvMembership env_membership_check(const RankedSympMatroid& s, ElementSet b);

struct Inequality {
  enum class Source { kCrossPolytope, kFlat };
  QVector normal;  // normal . x <= bound
  Rational bound;
  Source source = Source::kFlat;
  ElementSet flat;  // kFlat only
  int phi = 0;      // kFlat only
};

struct HPolytope {
  std::vector<Inequality> rows;
  bool contains(const QVector& x) const;
};

// Cross-polytope facets sum |x_i| <= r plus, for each proper nonempty flat F
// of L(S), e^±_F . x <= rank(F) - phi(F) with phi(F) = 1 iff |F| = n-1 and
// rank(F) = r-2.
HPolytope h_representation(const RankedSympMatroid& s);

enum class HvVerdict { kEqual, kVSubsetH, kInconsistent };
std::string to_string(HvVerdict v);

struct HvReport {
  bool v_in_h = false;  // every vertex of P(S) satisfies every inequality
  bool h_in_v = false;  // every vertex of the H-region is a vertex of P(S)
  HvVerdict verdict = HvVerdict::kInconsistent;
  std::vector<QVector> extra_vertices;  // H-vertices outside P(S)
};
// Enumerates the vertices of the H-region from all n-subsets of tight
// inequalities.
HvReport h_eq_v_check(const RankedSympMatroid& s);

// Bases maximizing direction . e^±_B.
std::vector<ElementSet> face_bases(const GroundSet& gs,
                                   std::span<const ElementSet> bases,
                                   const QVector& direction);
// Bases maximizing direction . e_B, as a matroid on the same ground set.
Matroid face_matroid(const Matroid& m, const QVector& direction);

}  // namespace smk

#endif  // SMK_GEOMETRY_HPP_
