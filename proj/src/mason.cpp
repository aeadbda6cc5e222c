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

#include "smk/mason.hpp"

#include <map>
#include <set>

#include "smk/linalg.hpp"

namespace smk {

std::int64_t count_independent(const Matroid& m, int k) {
  return static_cast<std::int64_t>(m.independent_sets(k).size());
}

std::int64_t count_independent(const RankedSympMatroid& s, int k) {
  std::set<ElementSet> seen;
  for (ElementSet b : s.bases()) {
    for_each_subset(b, [&](ElementSet sub) {
      if (sub.size() == k) seen.insert(sub);
    });
  }
  return static_cast<std::int64_t>(seen.size());
}

CountReport count_report(const RankedSympMatroid& s) {
  CountReport out;
  for (int k = 0; k <= s.rank(); ++k) {
    out.s_counts.push_back(count_independent(s, k));
    out.i_counts.push_back(count_independent(s.env(), k));
  }
  if (s.rank() >= 2) {
    const Matroid n = inadmissible_flat_matroid(s);
    for (int k = 0; k <= n.rank(); ++k) {
      out.j_counts.push_back(count_independent(n, k));
    }
  }
  return out;
}

bool counting_identity_check(const RankedSympMatroid& s) {
  const CountReport c = count_report(s);
  for (int k = 1; k <= s.rank(); ++k) {
    const std::int64_t j =
        k - 1 < static_cast<int>(c.j_counts.size()) ? c.j_counts[k - 1] : 0;
    if (((k - 1) * j) % 2 != 0) {
      throw ParityViolation("(k-1) J_{k-1} is odd at k=" + std::to_string(k));
    }
    if (c.s_counts[k] != c.i_counts[k] - (k - 1) * j / 2) return false;
  }
  return true;
}

bool class_size_check(const RankedSympMatroid& s) {
  const GroundSet& gs = s.ground();
  if (s.rank() < 2) throw std::invalid_argument("rank must be at least 2");
  const Matroid n = inadmissible_flat_matroid(s);
  for (int k = 2; k <= s.rank(); ++k) {
    std::map<ElementSet, std::int64_t> env_classes;
    for (ElementSet i : s.env().independent_sets(k)) {
      if (!gs.is_admissible(i)) ++env_classes[gs.pair_closure(i)];
    }
    std::map<ElementSet, std::int64_t> n_classes;
    for (ElementSet i : n.independent_sets(k - 1)) {
      ++n_classes[gs.pair_closure(i)];
    }
    const std::int64_t env_size = (std::int64_t{1} << (k - 2)) * (k - 1);
    const std::int64_t n_size = std::int64_t{1} << (k - 1);
    for (const auto& [key, size] : env_classes) {
      if (size != env_size) return false;
    }
    for (const auto& [key, size] : n_classes) {
      if (size != n_size) return false;
    }
    if (env_classes.size() != n_classes.size()) return false;
    for (auto a = env_classes.begin(), b = n_classes.begin();
         a != env_classes.end(); ++a, ++b) {
      if (a->first != b->first) return false;
    }
  }
  return true;
}

std::vector<bool> log_concavity_report(const std::vector<std::int64_t>& seq,
                                       int variant, int n) {
  if (variant < 1 || variant > 3) throw std::invalid_argument("variant");
  std::vector<bool> out;
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    Rational factor = 1;
    if (variant >= 2) factor *= Rational(k + 1, k);
    if (variant == 3) {
      const int rest = n - static_cast<int>(k);
      if (rest <= 0) throw std::invalid_argument("n must exceed k");
      factor *= Rational(rest + 1, rest);
    }
    const Rational lhs = Rational(seq[k]) * seq[k];
    out.push_back(lhs >= factor * seq[k - 1] * seq[k + 1]);
  }
  return out;
}

bool is_log_concave(const std::vector<std::int64_t>& seq, int variant, int n) {
  for (bool ok : log_concavity_report(seq, variant, n)) {
    if (!ok) return false;
  }
  return true;
}

Rank3Report rank3_check(const RankedSympMatroid& s) {
  if (s.rank() != 3) throw std::invalid_argument("rank must be 3");
  const CountReport c = count_report(s);
  const Rational n = s.n();
  const Rational i2 = c.i_counts[2];
  const Rational i3 = c.i_counts[3];
  const Rational j2 = c.j_counts[2];
  const Rational two_thirds(2, 3);
  Rank3Report out;
  out.log_concave = is_log_concave(c.s_counts, 1, 0);
  out.i3_bound = 2 * n * i3 <= two_thirds * i2 * i2;
  out.j2_bound = j2 >= n;
  const Rational middle = two_thirds * i2 * i2 - 2 * n * n;
  out.chain = (i2 - n) * (i2 - n) >= middle && middle >= 2 * n * (i3 - j2);
  return out;
}

}  // namespace smk
