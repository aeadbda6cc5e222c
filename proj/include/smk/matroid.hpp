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

#ifndef SMK_MATROID_HPP_
#define SMK_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "smk/groundset.hpp"

namespace smk {

class EmptyFamily : public std::runtime_error {
 public:
  EmptyFamily() : std::runtime_error("basis family is empty") {}
};

// Raised when the basis exchange axiom fails for (b1, b2, a): no b in
// b2 \ b1 makes (b1 - a) + b a basis.
class ExchangeViolation : public std::runtime_error {
 public:
  ExchangeViolation(ElementSet b1, ElementSet b2, int a);
  ElementSet b1;
  ElementSet b2;
  int a;
};

class CoLoopInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordinary matroid on {0, ..., groundsize-1} stored by its basis list. The
// rank table over all subsets is filled on first use and shared between
// copies.
class Matroid {
 public:
  static constexpr int kMaxGround = 20;

  // Validates equicardinality and the exchange axiom.
  static Matroid from_bases(int groundsize, std::vector<ElementSet> bases);
  // For families already known to be matroids (minors, constructions).
  static Matroid from_bases_unchecked(int groundsize,
                                      std::vector<ElementSet> bases);
  static Matroid uniform(int rank, int groundsize);

  int groundsize() const { return groundsize_; }
  ElementSet ground() const { return ElementSet::prefix(groundsize_); }
  int rank() const { return rank_; }
  const std::vector<ElementSet>& bases() const { return bases_; }
  bool is_basis(ElementSet a) const;

  int rank(ElementSet a) const;
  ElementSet closure(ElementSet a) const;
  bool is_independent(ElementSet a) const;
  bool is_flat(ElementSet a) const { return closure(a) == a; }

  ElementSet loops() const { return closure(ElementSet()); }
  bool is_loopless() const { return loops().empty(); }
  ElementSet coloops() const;

  // Closed sets ordered by (size, bits).
  std::vector<ElementSet> flats() const;
  std::vector<ElementSet> circuits() const;
  // Classes of the relation "lie on a common circuit"; loops and coloops
  // form singleton classes.
  std::vector<ElementSet> components() const;
  bool is_connected() const { return components().size() <= 1; }

  std::vector<ElementSet> independent_sets(int k) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.groundsize_ == b.groundsize_ && a.bases_ == b.bases_;
  }

 private:
  struct Tables;
  Matroid(int groundsize, std::vector<ElementSet> bases);
  const Tables& tables() const;

  int groundsize_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
  std::shared_ptr<Tables> tables_;
};

// A minor with its elements relabelled to {0, ..., m-1} preserving order.
// old_index[new] is the label in the parent matroid.
struct MatroidMinor {
  Matroid matroid;
  std::vector<int> old_index;
};

MatroidMinor delete_elements(const Matroid& m, ElementSet x);
MatroidMinor contract_elements(const Matroid& m, ElementSet x);
// (m / contract) \ remove, relabelled. The two sets must be disjoint.
MatroidMinor minor(const Matroid& m, ElementSet contract, ElementSet remove);
// Restriction to `keep`, i.e. deletion of the complement.
MatroidMinor restrict_to(const Matroid& m, ElementSet keep);

Matroid direct_sum(const Matroid& a, const Matroid& b);

// Order-preserving relabelling of `set` (a subset of the parent ground set)
// into the minor's labels.
ElementSet relabel_into(const MatroidMinor& minor, ElementSet set);

}  // namespace smk

#endif  // SMK_MATROID_HPP_
