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

#ifndef SMK_LATTICE_HPP_
#define SMK_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "smk/groundset.hpp"
#include "smk/matroid.hpp"

namespace smk {

// A finite family of sets ordered by inclusion, with a bottom and a top.
// Members are indexed 0..size()-1 in (cardinality, bits) order, so index 0
// is the bottom and size()-1 the top.
class SetLattice {
 public:
  // Rank labels default to the height above the bottom. Throws
  // std::invalid_argument if there is no unique bottom or top.
  static SetLattice from_family(std::vector<ElementSet> sets,
                                std::vector<int> ranks = {});

  int size() const { return static_cast<int>(sets_.size()); }
  ElementSet element(int i) const { return sets_[i]; }
  const std::vector<ElementSet>& elements() const { return sets_; }
  int rank(int i) const { return ranks_[i]; }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  std::optional<int> index_of(ElementSet s) const;

  bool leq(int i, int j) const { return sets_[i].subset_of(sets_[j]); }
  const std::vector<int>& upper_covers(int i) const { return up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return down_[i]; }
  // Pairs (i, j) with j covering i, sorted.
  std::vector<std::pair<int, int>> covers() const;
  std::vector<int> atoms() const { return up_[0]; }

  // Smallest member containing `s`; nullopt if none is unique.
  std::optional<int> join_of_set(ElementSet s) const;
  int join(int i, int j) const;
  // Largest member contained in both; the family need not be
  // intersection-closed.
  int meet(int i, int j) const;
  bool is_intersection_closed() const;

  // Möbius function mu(i, j); 0 unless i <= j.
  std::int64_t mobius(int i, int j) const;
  std::int64_t mobius_top() const { return mobius(bottom(), top()); }

  // Every rank label rises by exactly one along each cover.
  bool is_graded() const;
  bool is_semimodular() const;
  bool is_atomistic() const;

  std::vector<std::vector<int>> maximal_chains() const;

 private:
  struct Cache;
  std::vector<ElementSet> sets_;
  std::vector<int> ranks_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::shared_ptr<Cache> cache_;
};

// Lattice of flats with matroid ranks as labels.
SetLattice flat_lattice(const Matroid& m);

// Sum of mu(bottom, F) over the F whose join with `atom` is the top.
// Returns true iff it vanishes.
bool weisner_check(const SetLattice& lattice, int atom);
// Sum over sets B of atoms with join(B) = top of (-1)^|B|.
std::int64_t boolean_expansion(const SetLattice& lattice);

// Maximal chains form a connected graph when joined by differing in a
// single member.
bool chains_connected_in_codim_one(const SetLattice& lattice);

// mu of the flat lattice, or 0 when the matroid has loops.
std::int64_t matroid_mobius(const Matroid& m);

// mu(M) = mu(M \ a) - mu(M / a), and mu(M) = -sum mu(0, F) over hyperplanes
// F avoiding a. Throws CoLoopInput if a is a coloop, std::invalid_argument
// if m has loops.
bool ordinary_mobius_identities_check(const Matroid& m, int a);

}  // namespace smk

#endif  // SMK_LATTICE_HPP_
