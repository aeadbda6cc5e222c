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

#include "smk/moebius.hpp"

#include <stdexcept>

namespace smk {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t minor_mobius(const MatroidMinor& minor) {
  const GroundSet gs(minor.matroid.groundsize() / 2);
  if (!minor.matroid.is_loopless()) return 0;
  return symp_lattice(gs, minor.matroid).mobius_top();
}

}  // namespace

std::int64_t mobius_s(const RankedSympMatroid& s) {
  return flats_lattice(s).mobius_top();
}

XCorrection x_correction(const RankedSympMatroid& s) {
  const GroundSet& gs = s.ground();
  const SetLattice l = flat_lattice(s.env());
  const std::vector<int> atoms = l.atoms();
  const int count = static_cast<int>(atoms.size());
  XCorrection out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << count); ++pick) {
    ElementSet cover;
    std::vector<ElementSet> term;
    for (int i = 0; i < count; ++i) {
      if ((pick >> i) & 1u) {
        cover = cover | l.element(atoms[i]);
        term.push_back(l.element(atoms[i]));
      }
    }
    const ElementSet join = s.env().closure(cover);
    if (join == gs.full() || gs.is_admissible(join)) continue;
    out.value += term.size() % 2 == 0 ? 1 : -1;
    out.terms.push_back(std::move(term));
  }
  return out;
}

bool x_correction_identity_check(const RankedSympMatroid& s) {
  return mobius_s(s) == matroid_mobius(s.env()) + x_correction(s).value;
}

bool flat_sum_identity(const RankedSympMatroid& s, int a, int k) {
  const SetLattice l = flats_lattice(s);
  const int b = s.ground().star(a);
  std::int64_t with_a = 0;
  std::int64_t with_b = 0;
  for (int f = 0; f < l.size(); ++f) {
    if (l.rank(f) != k) continue;
    if (l.element(f).contains(a)) with_a += l.mobius(l.bottom(), f);
    if (l.element(f).contains(b)) with_b += l.mobius(l.bottom(), f);
  }
  return with_a == with_b;
}

ColoopVerdict is_coloop_pair(const RankedSympMatroid& s, int a) {
  const MatroidMinor rest = delete_pair_closure_env(s.ground(), s.env(), a);
  const GroundSet gs(rest.matroid.groundsize() / 2);
  ColoopVerdict out;
  if (gs.n() == 0) {
    out.coloop = true;
    out.detail = "closure of the pair is everything";
    return out;
  }
  std::vector<ElementSet> admissible;
  for (ElementSet b : rest.matroid.bases()) {
    if (gs.is_admissible(b)) admissible.push_back(b);
  }
  if (admissible.empty()) {
    out.degenerate = true;
    out.detail = "deletion has no admissible basis";
    return out;
  }
  const bool lagrangian = rest.matroid.rank() == gs.n();
  out.coloop = lagrangian && admissible.size() == (std::size_t{1} << gs.n());
  out.detail = out.coloop ? "deletion is U*_{m,m} with m=" + std::to_string(gs.n())
                          : "deletion is not U*_{m,m}";
  return out;
}

bool deletion_contraction_check(const RankedSympMatroid& s, int a) {
  if (s.rank() < 3) {
    throw std::invalid_argument("deletion-contraction needs rank >= 3");
  }
  const ColoopVerdict v = is_coloop_pair(s, a);
  if (v.coloop) {
    throw CoLoopInput("pair of " + s.ground().name(a) + " is a coloop pair");
  }
  const GroundSet& gs = s.ground();
  const std::int64_t del = minor_mobius(delete_pair_closure_env(gs, s.env(), a));
  const std::int64_t con_a = minor_mobius(contract_env(gs, s.env(), a));
  const std::int64_t con_b =
      minor_mobius(contract_env(gs, s.env(), gs.star(a)));
  return mobius_s(s) == del - con_a - con_b;
}

bool sign_alternation_check(const RankedSympMatroid& s) {
  const SetLattice l = flats_lattice(s);
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (!l.leq(x, y)) continue;
      const std::int64_t mu = l.mobius(x, y);
      const bool odd = (l.rank(y) - l.rank(x)) % 2 != 0;
      if ((odd ? -mu : mu) <= 0) return false;
    }
  }
  return true;
}

ColoopCorrection coloop_correction_term(int n) {
  if (n < 2) throw std::invalid_argument("coloop correction needs n >= 2");
  ColoopCorrection out;
  // n * C(2n-4, n-2) is even for every n >= 2.
  out.closed_form = (n % 2 == 0 ? 1 : -1) * n * binomial(2 * n - 4, n - 2) / 2;
  for (int k = 0; k <= n - 4; ++k) {
    out.alternating_sum -= (k % 2 == 0 ? 1 : -1) * n * binomial(2 * n - 4, k);
  }
  out.agree = out.closed_form == out.alternating_sum;
  return out;
}

}  // namespace smk
