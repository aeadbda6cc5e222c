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

#include "smk/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace smk {

struct SetLattice::Cache {
  std::mutex mutex;
  std::vector<std::vector<std::int64_t>> mobius_rows;
};

SetLattice SetLattice::from_family(std::vector<ElementSet> sets,
                                   std::vector<int> ranks) {
  if (sets.empty()) throw std::invalid_argument("empty lattice");
  std::vector<int> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const ElementSet a = sets[x];
    const ElementSet b = sets[y];
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  SetLattice l;
  for (int i : order) {
    if (!l.sets_.empty() && l.sets_.back() == sets[i]) continue;
    l.sets_.push_back(sets[i]);
    if (!ranks.empty()) l.ranks_.push_back(ranks[i]);
  }
  const int size = l.size();
  for (int i = 0; i < size; ++i) {
    if (!l.sets_[0].subset_of(l.sets_[i])) {
      throw std::invalid_argument("family has no unique bottom");
    }
    if (!l.sets_[i].subset_of(l.sets_[size - 1])) {
      throw std::invalid_argument("family has no unique top");
    }
  }
  l.up_.assign(size, {});
  l.down_.assign(size, {});
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < j; ++i) {
      if (l.sets_[i] == l.sets_[j] || !l.leq(i, j)) continue;
      bool cover = true;
      for (int k = i + 1; k < j && cover; ++k) {
        if (l.leq(i, k) && l.leq(k, j) && l.sets_[k] != l.sets_[i]) {
          cover = false;
        }
      }
      if (cover) {
        l.up_[i].push_back(j);
        l.down_[j].push_back(i);
      }
    }
  }
  if (l.ranks_.empty()) {
    l.ranks_.assign(size, 0);
    for (int j = 1; j < size; ++j) {
      for (int i : l.down_[j]) l.ranks_[j] = std::max(l.ranks_[j], l.ranks_[i] + 1);
    }
  }
  l.cache_ = std::make_shared<Cache>();
  l.cache_->mobius_rows.assign(size, {});
  return l;
}

std::optional<int> SetLattice::index_of(ElementSet s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s,
                             [](ElementSet a, ElementSet b) {
                               return a.size() != b.size() ? a.size() < b.size()
                                                           : a < b;
                             });
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - sets_.begin());
}

std::vector<std::pair<int, int>> SetLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    for (int j : up_[i]) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> SetLattice::join_of_set(ElementSet s) const {
  std::vector<int> minimal;
  for (int i = 0; i < size(); ++i) {
    if (!s.subset_of(sets_[i])) continue;
    bool is_min = true;
    for (int m : minimal) {
      if (leq(m, i)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(i);
  }
  if (minimal.size() != 1) return std::nullopt;
  return minimal.front();
}

int SetLattice::join(int i, int j) const {
  auto out = join_of_set(sets_[i] | sets_[j]);
  if (!out) throw std::logic_error("join does not exist");
  return *out;
}

int SetLattice::meet(int i, int j) const {
  const ElementSet s = sets_[i] & sets_[j];
  std::vector<int> maximal;
  for (int k = size(); k-- > 0;) {
    if (!sets_[k].subset_of(s)) continue;
    bool is_max = true;
    for (int m : maximal) {
      if (leq(k, m)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(k);
  }
  if (maximal.size() != 1) throw std::logic_error("meet does not exist");
  return maximal.front();
}

bool SetLattice::is_intersection_closed() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (!index_of(sets_[i] & sets_[j])) return false;
    }
  }
  return true;
}

std::int64_t SetLattice::mobius(int i, int j) const {
  if (!leq(i, j)) return 0;
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& row = cache_->mobius_rows[i];
  if (row.empty()) {
    row.assign(size(), 0);
    row[i] = 1;
    for (int y = i + 1; y < size(); ++y) {
      if (!leq(i, y)) continue;
      std::int64_t sum = 0;
      for (int z = i; z < y; ++z) {
        if (leq(i, z) && leq(z, y)) sum += row[z];
      }
      row[y] = -sum;
    }
  }
  return row[j];
}

bool SetLattice::is_graded() const {
  for (int i = 0; i < size(); ++i) {
    for (int j : up_[i]) {
      if (ranks_[j] != ranks_[i] + 1) return false;
    }
  }
  return true;
}

bool SetLattice::is_semimodular() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (ranks_[i] + ranks_[j] < ranks_[meet(i, j)] + ranks_[join(i, j)]) {
        return false;
      }
    }
  }
  return true;
}

bool SetLattice::is_atomistic() const {
  const std::vector<int> atom_list = atoms();
  for (int i = 1; i < size(); ++i) {
    ElementSet below;
    for (int a : atom_list) {
      if (leq(a, i)) below = below | sets_[a];
    }
    auto j = join_of_set(below);
    if (!j || *j != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> SetLattice::maximal_chains() const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain{bottom()};
  auto walk = [&](auto&& self, int at) -> void {
    if (at == top()) {
      out.push_back(chain);
      return;
    }
    for (int next : up_[at]) {
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  walk(walk, bottom());
  return out;
}

SetLattice flat_lattice(const Matroid& m) {
  std::vector<ElementSet> flats = m.flats();
  std::vector<int> ranks;
  ranks.reserve(flats.size());
  for (ElementSet f : flats) ranks.push_back(m.rank(f));
  return SetLattice::from_family(std::move(flats), std::move(ranks));
}

bool weisner_check(const SetLattice& lattice, int atom) {
  std::int64_t sum = 0;
  for (int f = 0; f < lattice.size(); ++f) {
    if (lattice.join(f, atom) == lattice.top()) {
      sum += lattice.mobius(lattice.bottom(), f);
    }
  }
  return sum == 0;
}

std::int64_t boolean_expansion(const SetLattice& lattice) {
  const std::vector<int> atoms = lattice.atoms();
  if (atoms.size() > 24) throw std::invalid_argument("too many atoms");
  const std::uint32_t count = 1u << atoms.size();
  // The empty set of atoms joins to the bottom.
  std::int64_t sum = lattice.size() == 1 ? 1 : 0;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    ElementSet u = lattice.element(lattice.bottom());
    for (std::size_t t = 0; t < atoms.size(); ++t) {
      if ((mask >> t) & 1u) u = u | lattice.element(atoms[t]);
    }
    auto j = lattice.join_of_set(u);
    if (j && *j == lattice.top()) sum += (std::popcount(mask) % 2) ? -1 : 1;
  }
  return sum;
}

bool chains_connected_in_codim_one(const SetLattice& lattice) {
  const auto chains = lattice.maximal_chains();
  if (chains.size() <= 1) return true;
  std::vector<int> parent(chains.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::vector<int>, int> seen;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (std::size_t p = 1; p + 1 < chains[c].size(); ++p) {
      std::vector<int> key = chains[c];
      key[p] = -static_cast<int>(p) - 1;
      auto [it, inserted] = seen.emplace(std::move(key), static_cast<int>(c));
      if (!inserted) parent[find(static_cast<int>(c))] = find(it->second);
    }
  }
  const int root = find(0);
  for (std::size_t c = 1; c < chains.size(); ++c) {
    if (find(static_cast<int>(c)) != root) return false;
  }
  return true;
}

std::int64_t matroid_mobius(const Matroid& m) {
  if (!m.is_loopless()) return 0;
  return flat_lattice(m).mobius_top();
}

bool ordinary_mobius_identities_check(const Matroid& m, int a) {
  if (!m.is_loopless()) throw std::invalid_argument("matroid has loops");
  if (m.coloops().contains(a)) {
    throw CoLoopInput("element " + std::to_string(a) + " is a coloop");
  }
  const std::int64_t mu = matroid_mobius(m);
  const std::int64_t del =
      matroid_mobius(delete_elements(m, ElementSet::singleton(a)).matroid);
  const std::int64_t con =
      matroid_mobius(contract_elements(m, ElementSet::singleton(a)).matroid);
  if (mu != del - con) return false;

  const SetLattice lattice = flat_lattice(m);
  std::int64_t sum = 0;
  for (int f = 0; f < lattice.size(); ++f) {
    if (lattice.rank(f) == m.rank() - 1 && !lattice.element(f).contains(a)) {
      sum += lattice.mobius(lattice.bottom(), f);
    }
  }
  return mu == -sum;
}

}  // namespace smk
