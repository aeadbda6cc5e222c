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

#ifndef SMK_SYMPCORE_HPP_
#define SMK_SYMPCORE_HPP_

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "smk/groundset.hpp"
#include "smk/lattice.hpp"
#include "smk/matroid.hpp"

namespace smk {

class NotAdmissible : public std::runtime_error {
 public:
  NotAdmissible(const std::string& what, ElementSet witness)
      : std::runtime_error(what), witness(witness) {}
  ElementSet witness;
};

class NoAdmissibleBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateMinor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecompositionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MultipleMinima : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of the admissibility test. `witness` is the first subset (in bit
// order) where the derived rank disagrees with the matroid rank, or the
// offending atom / loop.
struct AdmissibilityCertificate {
  enum class Reason { kOk, kGroundSize, kLoop, kRankFormula, kInadmissibleAtom };
  bool admissible = false;
  Reason reason = Reason::kOk;
  ElementSet witness;
  int formula_rank = 0;
  int matroid_rank = 0;
};

// Rank of `a` recomputed from the admissible independent sets of `m`: the
// max over admissible independent I in a whose closure is admissible or all
// of J, of |I| + 2 if some pair {x, x*} in a has both I+x and I+x*
// independent with admissible closure, else |I|.
int derived_rank(const GroundSet& gs, const Matroid& m, ElementSet a);

// Loopless, derived rank equals matroid rank on every subset, and every atom
// of the flat lattice (or the whole set when the rank is 1) is admissible.
AdmissibilityCertificate check_admissible_matroid(const GroundSet& gs,
                                                  const Matroid& m);
inline bool is_admissible_matroid(const GroundSet& gs, const Matroid& m) {
  return check_admissible_matroid(gs, m).admissible;
}

// Admissible bases of an admissible enveloping matroid.
class RankedSympMatroid {
 public:
  // Throws NotAdmissible or NoAdmissibleBasis.
  RankedSympMatroid(GroundSet gs, Matroid env);

  const GroundSet& ground() const { return gs_; }
  int n() const { return gs_.n(); }
  const Matroid& env() const { return env_; }
  const std::vector<ElementSet>& bases() const { return bases_; }
  int rank() const { return env_.rank(); }

 private:
  GroundSet gs_;
  Matroid env_;
  std::vector<ElementSet> bases_;
};

inline RankedSympMatroid ranked_symp(const GroundSet& gs, const Matroid& m) {
  return RankedSympMatroid(gs, m);
}

// Admissible enveloping matroid of the uniform family U*_{k,n}: rank
// function min(k, pairs met + [inadmissible]).
Matroid uniform_envelope(int k, int n);
RankedSympMatroid uniform_symp(int k, int n);

// Strongly admissible sets of size k, built recursively: B + x with x, x*
// outside the closure of B.
std::vector<ElementSet> strongly_admissible_sets(const GroundSet& gs,
                                                 const Matroid& m, int k);
inline std::vector<ElementSet> strongly_admissible_sets(
    const RankedSympMatroid& s, int k) {
  return strongly_admissible_sets(s.ground(), s.env(), k);
}

// Admissible flats plus the full ground set, ranked by the matroid rank.
// Works for any matroid on J, including minors without admissible bases.
SetLattice symp_lattice(const GroundSet& gs, const Matroid& m);
inline SetLattice flats_lattice(const RankedSympMatroid& s) {
  return symp_lattice(s.ground(), s.env());
}

struct CnLatticeVerdict {
  bool ok = true;
  int failing_axiom = 0;  // 1..4, 0 when ok
  std::string detail;
};
// The four lattice axioms: bounds present, proper members admissible,
// closed under intersection, covers of each A pairwise meet in A and jointly
// cover J minus A*.
CnLatticeVerdict check_cn_lattice(const GroundSet& gs, const SetLattice& l);

// Unique Gale-maximal member under every C order.
bool is_symplectic(const GroundSet& gs, std::span<const ElementSet> bases);

// The greedy maximal basis of the envelope is admissible for every C order.
bool maximal_basis_admissible_check(const RankedSympMatroid& s);

// Envelope minors on the shrunken ground set; the labels of the remaining
// pairs are compressed in order. These do not require admissible bases.
MatroidMinor delete_pair_env(const GroundSet& gs, const Matroid& m, int a);
// (M / cl(a)) \ (cl{a, a*} - cl(a)).
MatroidMinor contract_env(const GroundSet& gs, const Matroid& m, int a);
// M \ cl{a, a*}.
MatroidMinor delete_pair_closure_env(const GroundSet& gs, const Matroid& m,
                                     int a);

// Throw DegenerateMinor if the minor is not a ranked symplectic matroid.
RankedSympMatroid delete_pair(const RankedSympMatroid& s, int a);
RankedSympMatroid contract_elem(const RankedSympMatroid& s, int a);

// Matroid whose bases are the strongly admissible sets of size rank-1.
Matroid inadmissible_flat_matroid(const RankedSympMatroid& s);
// Its flats are exactly the empty set and the inadmissible flats of env.
bool inadmissible_flat_lattice_check(const RankedSympMatroid& s);

struct PsiReport {
  std::map<ElementSet, ElementSet> map;  // parent labels
  bool bijective = false;
};
// Map from bases of S/a to bases of S/a*. Throws DecompositionFailure if a
// basis splits into a strongly admissible part plus an element in more than
// one inequivalent way.
PsiReport psi_bijection(const RankedSympMatroid& s, int a);

// Every admissible flat F covered by an inadmissible flat F' != J satisfies
// F' = F + F*, and the cover map [cl a, F] -> [cl{a,a*}, F'] is an order
// isomorphism for each a in F.
bool covered_flats_check(const RankedSympMatroid& s);

// env is connected or has rank 2.
bool connectivity_check(const RankedSympMatroid& s);

// Every flat is admissible or totally inadmissible.
bool flat_dichotomy_check(const GroundSet& gs, const Matroid& m);
// Non-spanning independent sets are strongly admissible iff their closure
// is admissible.
bool strong_admissibility_check(const RankedSympMatroid& s);
// env \ F is admissible for every inadmissible flat F != J.
bool inadmissible_deletion_check(const RankedSympMatroid& s);

struct EnvelopeSearchStats {
  std::size_t nodes = 0;
  int candidates = 0;
};

// The admissible matroid with the fewest bases whose admissible bases are
// exactly `bases`. Throws NotFound, or MultipleMinima if the minimum is not
// unique.
Matroid minimal_enveloping(const GroundSet& gs,
                           std::span<const ElementSet> bases,
                           EnvelopeSearchStats* stats = nullptr);

}  // namespace smk

#endif  // SMK_SYMPCORE_HPP_
