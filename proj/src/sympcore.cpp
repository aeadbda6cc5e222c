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

#include "smk/sympcore.hpp"

#include <algorithm>
#include <set>

namespace smk {

namespace {

// Per-subset flags used by the derived-rank formula.
struct AdmissibleTables {
  // Admissible independent sets whose closure is admissible or everything.
  std::vector<char> admissible_independent;
  std::vector<char> admissible_closure;  // independent with admissible closure

  AdmissibleTables(const GroundSet& gs, const Matroid& m) {
    const std::uint32_t count = 1u << gs.size();
    admissible_independent.assign(count, 0);
    admissible_closure.assign(count, 0);
    for (std::uint32_t s = 0; s < count; ++s) {
      const ElementSet a(s);
      if (!m.is_independent(a)) continue;
      const ElementSet cl = m.closure(a);
      admissible_closure[s] = gs.is_admissible(cl);
      admissible_independent[s] =
          gs.is_admissible(a) && (admissible_closure[s] || cl == gs.full());
    }
  }
};

int derived_rank_with(const GroundSet& gs, const AdmissibleTables& t,
                      ElementSet a) {
  int best = 0;
  for_each_subset(a, [&](ElementSet i) {
    if (!t.admissible_independent[i.bits()]) return;
    int value = i.size();
    for (int p = 0; p < gs.n(); ++p) {
      if (!gs.pair(p).subset_of(a)) continue;
      if (t.admissible_closure[i.with(p).bits()] &&
          t.admissible_closure[i.with(p + gs.n()).bits()]) {
        value = i.size() + 2;
        break;
      }
    }
    best = std::max(best, value);
  });
  return best;
}

GroundSet minor_ground(const MatroidMinor& minor) {
  const int size = minor.matroid.groundsize();
  if (size % 2 != 0) throw DegenerateMinor("minor ground set has odd size");
  return GroundSet(size / 2);
}

// Labels kept by a minor must remain a union of pairs for the compressed
// labelling to be the standard one.
void require_star_closed(const GroundSet& gs, ElementSet removed) {
  if (!gs.is_totally_inadmissible(removed)) {
    throw DegenerateMinor("removed set " + gs.format(removed) +
                          " is not a union of pairs");
  }
}

RankedSympMatroid as_symp(const MatroidMinor& minor, const std::string& what) {
  try {
    return RankedSympMatroid(minor_ground(minor), minor.matroid);
  } catch (const NotAdmissible& e) {
    throw DegenerateMinor(what + ": " + e.what());
  } catch (const NoAdmissibleBasis& e) {
    throw DegenerateMinor(what + ": " + e.what());
  }
}

}  // namespace

int derived_rank(const GroundSet& gs, const Matroid& m, ElementSet a) {
  return derived_rank_with(gs, AdmissibleTables(gs, m), a);
}

AdmissibilityCertificate check_admissible_matroid(const GroundSet& gs,
                                                  const Matroid& m) {
  using Reason = AdmissibilityCertificate::Reason;
  AdmissibilityCertificate cert;
  if (m.groundsize() != gs.size()) {
    cert.reason = Reason::kGroundSize;
    return cert;
  }
  if (!m.is_loopless()) {
    cert.reason = Reason::kLoop;
    cert.witness = m.loops();
    return cert;
  }
  const AdmissibleTables tables(gs, m);
  const std::uint32_t count = 1u << gs.size();
  for (std::uint32_t s = 0; s < count; ++s) {
    const ElementSet a(s);
    const int derived = derived_rank_with(gs, tables, a);
    if (derived != m.rank(a)) {
      cert.reason = Reason::kRankFormula;
      cert.witness = a;
      cert.formula_rank = derived;
      cert.matroid_rank = m.rank(a);
      return cert;
    }
  }
  for (ElementSet f : m.flats()) {
    if (m.rank(f) == 1 && !gs.is_admissible(f)) {
      cert.reason = Reason::kInadmissibleAtom;
      cert.witness = f;
      cert.formula_rank = 1;
      cert.matroid_rank = 1;
      return cert;
    }
  }
  cert.admissible = true;
  return cert;
}

RankedSympMatroid::RankedSympMatroid(GroundSet gs, Matroid env)
    : gs_(gs), env_(std::move(env)) {
  const AdmissibilityCertificate cert = check_admissible_matroid(gs_, env_);
  if (!cert.admissible) {
    throw NotAdmissible("matroid is not admissible at " + gs_.format(cert.witness),
                        cert.witness);
  }
  for (ElementSet b : env_.bases()) {
    if (gs_.is_admissible(b)) bases_.push_back(b);
  }
  if (bases_.empty()) throw NoAdmissibleBasis("no admissible basis");
}

Matroid uniform_envelope(int k, int n) {
  const GroundSet gs(n);
  if (k < 1 || k > n) throw std::invalid_argument("uniform: need 1 <= k <= n");
  std::vector<ElementSet> bases;
  for (ElementSet a : k_subsets(gs.size(), k)) {
    if (gs.pairs_touched(a) + (gs.is_admissible(a) ? 0 : 1) >= k) {
      bases.push_back(a);
    }
  }
  return Matroid::from_bases(gs.size(), std::move(bases));
}

RankedSympMatroid uniform_symp(int k, int n) {
  return RankedSympMatroid(GroundSet(n), uniform_envelope(k, n));
}

std::vector<ElementSet> strongly_admissible_sets(const GroundSet& gs,
                                                 const Matroid& m, int k) {
  std::set<ElementSet> level{ElementSet()};
  for (int size = 0; size < k; ++size) {
    std::set<ElementSet> next;
    for (ElementSet b : level) {
      const ElementSet cl = m.closure(b);
      for (int x = 0; x < gs.size(); ++x) {
        if (!cl.contains(x) && !cl.contains(gs.star(x))) next.insert(b.with(x));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

SetLattice symp_lattice(const GroundSet& gs, const Matroid& m) {
  std::vector<ElementSet> sets;
  std::vector<int> ranks;
  for (ElementSet f : m.flats()) {
    if (gs.is_admissible(f) && f != gs.full()) {
      sets.push_back(f);
      ranks.push_back(m.rank(f));
    }
  }
  sets.push_back(gs.full());
  ranks.push_back(m.rank());
  return SetLattice::from_family(std::move(sets), std::move(ranks));
}

CnLatticeVerdict check_cn_lattice(const GroundSet& gs, const SetLattice& l) {
  CnLatticeVerdict v;
  auto fail = [&](int axiom, std::string detail) {
    v.ok = false;
    v.failing_axiom = axiom;
    v.detail = std::move(detail);
    return v;
  };
  if (!l.index_of(ElementSet()) || !l.index_of(gs.full())) {
    return fail(1, "empty set or J missing");
  }
  for (int i = 0; i < l.size(); ++i) {
    if (l.element(i) != gs.full() && !gs.is_admissible(l.element(i))) {
      return fail(2, gs.format(l.element(i)) + " is not admissible");
    }
  }
  for (int i = 0; i < l.size(); ++i) {
    for (int j = i + 1; j < l.size(); ++j) {
      if (!l.index_of(l.element(i) & l.element(j))) {
        return fail(3, "intersection of " + gs.format(l.element(i)) + " and " +
                           gs.format(l.element(j)) + " missing");
      }
    }
  }
  for (int i = 0; i < l.size(); ++i) {
    const ElementSet a = l.element(i);
    const auto& covers = l.upper_covers(i);
    ElementSet united;
    for (std::size_t x = 0; x < covers.size(); ++x) {
      united = united | l.element(covers[x]);
      for (std::size_t y = x + 1; y < covers.size(); ++y) {
        if ((l.element(covers[x]) & l.element(covers[y])) != a) {
          return fail(4, "covers of " + gs.format(a) + " meet above it");
        }
      }
    }
    if (!(gs.full() - gs.star(a)).subset_of(united)) {
      return fail(4, "covers of " + gs.format(a) + " miss J \\ A*");
    }
  }
  return v;
}

bool is_symplectic(const GroundSet& gs, std::span<const ElementSet> bases) {
  if (bases.empty()) return false;
  for (const AdmissibleOrder& order :
       enumerate_admissible_orders(gs, OrderKind::C)) {
    if (!gale_maximum(order, bases)) return false;
  }
  return true;
}

bool maximal_basis_admissible_check(const RankedSympMatroid& s) {
  for (const AdmissibleOrder& order :
       enumerate_admissible_orders(s.ground(), OrderKind::C)) {
    ElementSet basis;
    for (int e : order.top_down()) {
      if (s.env().is_independent(basis.with(e))) basis = basis.with(e);
    }
    if (!s.ground().is_admissible(basis)) return false;
  }
  return true;
}

MatroidMinor delete_pair_env(const GroundSet& gs, const Matroid& m, int a) {
  return delete_elements(m, gs.pair(gs.pair_index(a)));
}

MatroidMinor contract_env(const GroundSet& gs, const Matroid& m, int a) {
  const ElementSet cl_a = m.closure(ElementSet::singleton(a));
  const ElementSet cl_pair = m.closure(gs.pair(gs.pair_index(a)));
  require_star_closed(gs, cl_pair);
  return minor(m, cl_a, cl_pair - cl_a);
}

MatroidMinor delete_pair_closure_env(const GroundSet& gs, const Matroid& m,
                                     int a) {
  const ElementSet cl_pair = m.closure(gs.pair(gs.pair_index(a)));
  require_star_closed(gs, cl_pair);
  return delete_elements(m, cl_pair);
}

RankedSympMatroid delete_pair(const RankedSympMatroid& s, int a) {
  return as_symp(delete_pair_env(s.ground(), s.env(), a),
                 "deletion of " + s.ground().name(a));
}

RankedSympMatroid contract_elem(const RankedSympMatroid& s, int a) {
  return as_symp(contract_env(s.ground(), s.env(), a),
                 "contraction of " + s.ground().name(a));
}

Matroid inadmissible_flat_matroid(const RankedSympMatroid& s) {
  if (s.rank() < 2) throw std::invalid_argument("rank must be at least 2");
  return Matroid::from_bases(s.ground().size(),
                             strongly_admissible_sets(s, s.rank() - 1));
}

bool inadmissible_flat_lattice_check(const RankedSympMatroid& s) {
  const Matroid n = inadmissible_flat_matroid(s);
  std::vector<ElementSet> expected{ElementSet()};
  for (ElementSet f : s.env().flats()) {
    if (!s.ground().is_admissible(f)) expected.push_back(f);
  }
  std::vector<ElementSet> actual = n.flats();
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  return expected == actual;
}

PsiReport psi_bijection(const RankedSympMatroid& s, int a) {
  if (s.rank() < 3) throw std::invalid_argument("psi needs rank >= 3");
  const GroundSet& gs = s.ground();
  const MatroidMinor from = contract_env(gs, s.env(), a);
  const MatroidMinor to = contract_env(gs, s.env(), gs.star(a));
  const RankedSympMatroid sa = as_symp(from, "contraction of " + gs.name(a));
  const RankedSympMatroid sb =
      as_symp(to, "contraction of " + gs.name(gs.star(a)));
  const GroundSet& mg = sa.ground();
  const int d = sa.rank();
  const std::vector<ElementSet> full = strongly_admissible_sets(sa, d);
  const std::vector<ElementSet> part = strongly_admissible_sets(sa, d - 1);
  auto expand = [&](ElementSet x) {
    ElementSet out;
    for (int e : x.elements()) out = out.with(from.old_index[e]);
    return out;
  };

  PsiReport report;
  std::set<ElementSet> images;
  for (ElementSet basis : sa.bases()) {
    ElementSet image;
    if (std::binary_search(full.begin(), full.end(), basis)) {
      image = basis;
    } else {
      std::set<ElementSet> options;
      for (int b : basis.elements()) {
        if (std::binary_search(part.begin(), part.end(), basis.without(b))) {
          options.insert(basis.without(b).with(mg.star(b)));
        }
      }
      if (options.size() != 1) {
        throw DecompositionFailure("basis " + mg.format(basis) + " has " +
                                   std::to_string(options.size()) +
                                   " decompositions");
      }
      image = *options.begin();
    }
    report.map[expand(basis)] = expand(image);
    images.insert(image);
  }
  const std::set<ElementSet> target(sb.bases().begin(), sb.bases().end());
  report.bijective = images.size() == sa.bases().size() && images == target;
  return report;
}

bool covered_flats_check(const RankedSympMatroid& s) {
  const GroundSet& gs = s.ground();
  const Matroid& m = s.env();
  const SetLattice l = flat_lattice(m);
  auto inadmissible_cover = [&](int g) -> std::optional<int> {
    std::optional<int> found;
    for (int h : l.upper_covers(g)) {
      if (gs.is_admissible(l.element(h))) continue;
      if (found) return std::nullopt;
      found = h;
    }
    return found;
  };
  for (int fp = 0; fp < l.size(); ++fp) {
    const ElementSet big = l.element(fp);
    if (gs.is_admissible(big) || big == gs.full()) continue;
    for (int f : l.lower_covers(fp)) {
      const ElementSet small = l.element(f);
      if (!gs.is_admissible(small)) continue;
      if (big != (small | gs.star(small))) return false;
      for (int a : small.elements()) {
        const ElementSet lo = m.closure(ElementSet::singleton(a));
        const ElementSet hi = m.closure(gs.pair(gs.pair_index(a)));
        std::vector<int> lower, upper;
        for (int g = 0; g < l.size(); ++g) {
          const ElementSet e = l.element(g);
          if (lo.subset_of(e) && e.subset_of(small)) lower.push_back(g);
          if (hi.subset_of(e) && e.subset_of(big)) upper.push_back(g);
        }
        if (lower.size() != upper.size()) return false;
        std::vector<int> image;
        for (int g : lower) {
          auto h = inadmissible_cover(g);
          if (!h || std::find(upper.begin(), upper.end(), *h) == upper.end()) {
            return false;
          }
          image.push_back(*h);
        }
        std::vector<int> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          return false;
        }
        for (std::size_t x = 0; x < lower.size(); ++x) {
          for (std::size_t y = 0; y < lower.size(); ++y) {
            if (l.leq(lower[x], lower[y]) != l.leq(image[x], image[y])) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool connectivity_check(const RankedSympMatroid& s) {
  return s.rank() == 2 || s.env().is_connected();
}

bool flat_dichotomy_check(const GroundSet& gs, const Matroid& m) {
  for (ElementSet f : m.flats()) {
    if (!gs.is_admissible(f) && !gs.is_totally_inadmissible(f)) return false;
  }
  return true;
}

bool strong_admissibility_check(const RankedSympMatroid& s) {
  const GroundSet& gs = s.ground();
  for (int k = 0; k < s.rank(); ++k) {
    const std::vector<ElementSet> strong = strongly_admissible_sets(s, k);
    for (ElementSet i : s.env().independent_sets(k)) {
      const bool recursive = std::binary_search(strong.begin(), strong.end(), i);
      if (recursive != gs.is_admissible(s.env().closure(i))) return false;
    }
  }
  return true;
}

bool inadmissible_deletion_check(const RankedSympMatroid& s) {
  const GroundSet& gs = s.ground();
  for (ElementSet f : s.env().flats()) {
    if (gs.is_admissible(f) || f == gs.full()) continue;
    if (!gs.is_totally_inadmissible(f)) return false;
    const MatroidMinor rest = delete_elements(s.env(), f);
    if (!is_admissible_matroid(minor_ground(rest), rest.matroid)) return false;
  }
  return true;
}

namespace {

class EnvelopeSearch {
 public:
  static constexpr std::size_t kNodeBudget = 20'000'000;

  EnvelopeSearch(const GroundSet& gs, std::span<const ElementSet> bases)
      : gs_(gs), state_(std::size_t{1} << gs.size(), kAbsent) {
    k_ = bases.front().size();
    for (ElementSet b : bases) {
      if (!gs.is_admissible(b) || b.size() != k_) {
        throw std::invalid_argument("input bases must be admissible k-sets");
      }
      state_[b.bits()] = kIn;
      family_.push_back(b);
    }
    for (ElementSet c : k_subsets(gs.size(), k_)) {
      if (gs.pairs_touched(c) == k_ - 1) {
        candidates_.push_back(c);
        state_[c.bits()] = kOpen;
      }
    }
  }

  void run() { dfs(0); }

  const std::vector<std::vector<ElementSet>>& minima() const { return minima_; }
  std::size_t nodes() const { return nodes_; }
  int candidates() const { return static_cast<int>(candidates_.size()); }
  bool exhausted() const { return exhausted_; }
  int k() const { return k_; }

 private:
  enum : char { kAbsent = 0, kIn = 1, kOpen = 2, kOut = 3 };

  // False if some exchange requirement can no longer be met.
  bool feasible(bool complete) const {
    for (ElementSet b1 : family_) {
      for (ElementSet b2 : family_) {
        for (int a : (b1 - b2).elements()) {
          const ElementSet stem = b1.without(a);
          bool met = false;
          bool open = false;
          for (int b : (b2 - b1).elements()) {
            const char st = state_[stem.with(b).bits()];
            if (st == kIn) {
              met = true;
              break;
            }
            if (st == kOpen) open = true;
          }
          if (!met && (complete || !open)) return false;
        }
      }
    }
    return true;
  }

  void dfs(std::size_t i) {
    if (++nodes_ > kNodeBudget) {
      exhausted_ = true;
      return;
    }
    if (exhausted_) return;
    if (best_ >= 0 && static_cast<int>(family_.size()) > best_) return;
    if (!feasible(false)) return;
    if (i == candidates_.size()) {
      accept();
      return;
    }
    const ElementSet c = candidates_[i];
    state_[c.bits()] = kOut;
    dfs(i + 1);
    state_[c.bits()] = kIn;
    family_.push_back(c);
    dfs(i + 1);
    family_.pop_back();
    state_[c.bits()] = kOpen;
  }

  void accept() {
    if (!feasible(true)) return;
    const Matroid m = Matroid::from_bases_unchecked(gs_.size(), family_);
    if (!is_admissible_matroid(gs_, m)) return;
    const int total = static_cast<int>(family_.size());
    if (best_ < 0 || total < best_) {
      best_ = total;
      minima_.clear();
    }
    minima_.push_back(m.bases());
  }

  GroundSet gs_;
  int k_ = 0;
  std::vector<char> state_;
  std::vector<ElementSet> family_;
  std::vector<ElementSet> candidates_;
  std::vector<std::vector<ElementSet>> minima_;
  int best_ = -1;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

Matroid minimal_enveloping(const GroundSet& gs,
                           std::span<const ElementSet> bases,
                           EnvelopeSearchStats* stats) {
  if (bases.empty()) throw EmptyFamily();
  if (gs.size() > 10) throw std::invalid_argument("ground set too large");
  EnvelopeSearch search(gs, bases);
  search.run();
  if (stats) {
    stats->nodes = search.nodes();
    stats->candidates = search.candidates();
  }
  if (search.exhausted()) {
    throw NotFound("envelope search budget exhausted after " +
                   std::to_string(search.nodes()) + " nodes");
  }
  if (search.minima().empty()) {
    throw NotFound("no admissible matroid envelopes the family");
  }
  if (search.minima().size() > 1) {
    throw MultipleMinima(std::to_string(search.minima().size()) +
                         " envelopes share the minimum basis count");
  }
  return Matroid::from_bases_unchecked(gs.size(), search.minima().front());
}

}  // namespace smk
