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

#include "smk/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace smk {

namespace {

std::string set_bits_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace

ExchangeViolation::ExchangeViolation(ElementSet b1_, ElementSet b2_, int a_)
    : std::runtime_error("basis exchange fails for B1=" + set_bits_string(b1_) +
                         " B2=" + set_bits_string(b2_) +
                         " a=" + std::to_string(a_)),
      b1(b1_),
      b2(b2_),
      a(a_) {}

struct Matroid::Tables {
  std::once_flag once;
  std::vector<std::int8_t> rank;  // indexed by subset bits
};

Matroid::Matroid(int groundsize, std::vector<ElementSet> bases)
    : groundsize_(groundsize),
      rank_(bases.empty() ? 0 : bases.front().size()),
      bases_(std::move(bases)),
      tables_(std::make_shared<Tables>()) {}

Matroid Matroid::from_bases_unchecked(int groundsize,
                                      std::vector<ElementSet> bases) {
  if (groundsize < 0 || groundsize > kMaxGround) {
    throw std::invalid_argument("groundsize out of range");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid(groundsize, std::move(bases));
}

Matroid Matroid::from_bases(int groundsize, std::vector<ElementSet> bases) {
  if (bases.empty()) throw EmptyFamily();
  Matroid m = from_bases_unchecked(groundsize, std::move(bases));
  const ElementSet ground = m.ground();
  for (ElementSet b : m.bases_) {
    if (!b.subset_of(ground)) {
      throw std::invalid_argument("basis outside the ground set");
    }
    if (b.size() != m.rank_) {
      throw std::invalid_argument("bases are not equicardinal");
    }
  }
  for (ElementSet b1 : m.bases_) {
    for (ElementSet b2 : m.bases_) {
      for (int a : (b1 - b2).elements()) {
        const ElementSet stem = b1.without(a);
        bool found = false;
        for (int b : (b2 - b1).elements()) {
          if (m.is_basis(stem.with(b))) {
            found = true;
            break;
          }
        }
        if (!found) throw ExchangeViolation(b1, b2, a);
      }
    }
  }
  return m;
}

Matroid Matroid::uniform(int rank, int groundsize) {
  return from_bases_unchecked(groundsize, k_subsets(groundsize, rank));
}

bool Matroid::is_basis(ElementSet a) const {
  return std::binary_search(bases_.begin(), bases_.end(), a);
}

const Matroid::Tables& Matroid::tables() const {
  std::call_once(tables_->once, [this] {
    const std::size_t count = std::size_t{1} << groundsize_;
    std::vector<std::int8_t> indep(count, 0);
    for (ElementSet b : bases_) indep[b.bits()] = 1;
    // Subsets of bases are independent.
    for (int e = 0; e < groundsize_; ++e) {
      const std::uint32_t bit = 1u << e;
      for (std::uint32_t s = count; s-- > 0;) {
        if ((s & bit) && indep[s]) indep[s & ~bit] = 1;
      }
    }
    std::vector<std::int8_t> rank(count, 0);
    for (std::uint32_t s = 1; s < count; ++s) {
      if (indep[s]) {
        rank[s] = static_cast<std::int8_t>(std::popcount(s));
      } else {
        std::int8_t best = 0;
        for (std::uint32_t b = s; b != 0; b &= b - 1) {
          const std::uint32_t sub = s & ~(b & -b);
          best = std::max(best, rank[sub]);
        }
        rank[s] = best;
      }
    }
    tables_->rank = std::move(rank);
  });
  return *tables_;
}

int Matroid::rank(ElementSet a) const { return tables().rank[a.bits()]; }

bool Matroid::is_independent(ElementSet a) const { return rank(a) == a.size(); }

ElementSet Matroid::closure(ElementSet a) const {
  const int r = rank(a);
  ElementSet out = a;
  for (int e = 0; e < groundsize_; ++e) {
    if (!a.contains(e) && rank(a.with(e)) == r) out = out.with(e);
  }
  return out;
}

ElementSet Matroid::coloops() const {
  ElementSet out = ground();
  for (ElementSet b : bases_) out = out & b;
  return out;
}

std::vector<ElementSet> Matroid::flats() const {
  std::vector<ElementSet> out;
  const std::uint32_t count = 1u << groundsize_;
  for (std::uint32_t s = 0; s < count; ++s) {
    if (is_flat(ElementSet(s))) out.emplace_back(s);
  }
  std::sort(out.begin(), out.end(), [](ElementSet x, ElementSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::vector<ElementSet> Matroid::circuits() const {
  std::vector<ElementSet> out;
  const std::uint32_t count = 1u << groundsize_;
  for (std::uint32_t s = 1; s < count; ++s) {
    const ElementSet c(s);
    if (is_independent(c)) continue;
    bool minimal = true;
    for (int e : c.elements()) {
      if (!is_independent(c.without(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<ElementSet> Matroid::components() const {
  std::vector<int> parent(groundsize_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : circuits()) {
    const int root = find(c.front());
    for (int e : c.elements()) parent[find(e)] = root;
  }
  std::vector<ElementSet> classes(groundsize_);
  for (int e = 0; e < groundsize_; ++e) {
    classes[find(e)] = classes[find(e)].with(e);
  }
  std::vector<ElementSet> out;
  for (ElementSet c : classes) {
    if (!c.empty()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> Matroid::independent_sets(int k) const {
  std::vector<ElementSet> out;
  for (ElementSet s : k_subsets(groundsize_, k)) {
    if (is_independent(s)) out.push_back(s);
  }
  return out;
}

namespace {

std::vector<int> kept_labels(int groundsize, ElementSet removed) {
  std::vector<int> old_index;
  for (int e = 0; e < groundsize; ++e) {
    if (!removed.contains(e)) old_index.push_back(e);
  }
  return old_index;
}

ElementSet compress(ElementSet s, const std::vector<int>& old_index) {
  ElementSet out;
  for (std::size_t i = 0; i < old_index.size(); ++i) {
    if (s.contains(old_index[i])) out = out.with(static_cast<int>(i));
  }
  return out;
}

}  // namespace

ElementSet relabel_into(const MatroidMinor& minor, ElementSet set) {
  return compress(set, minor.old_index);
}

MatroidMinor delete_elements(const Matroid& m, ElementSet x) {
  std::vector<int> old_index = kept_labels(m.groundsize(), x);
  const ElementSet keep = m.ground() - x;
  const int r = m.rank(keep);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if ((b & keep).size() == r) bases.push_back(compress(b & keep, old_index));
  }
  const int size = static_cast<int>(old_index.size());
  return {Matroid::from_bases_unchecked(size, std::move(bases)),
          std::move(old_index)};
}

MatroidMinor contract_elements(const Matroid& m, ElementSet x) {
  std::vector<int> old_index = kept_labels(m.groundsize(), x);
  const int rx = m.rank(x);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if ((b & x).size() == rx) bases.push_back(compress(b - x, old_index));
  }
  const int size = static_cast<int>(old_index.size());
  return {Matroid::from_bases_unchecked(size, std::move(bases)),
          std::move(old_index)};
}

MatroidMinor minor(const Matroid& m, ElementSet contract, ElementSet remove) {
  if (contract.intersects(remove)) {
    throw std::invalid_argument("minor: contract and delete sets overlap");
  }
  std::vector<int> old_index = kept_labels(m.groundsize(), contract | remove);
  const ElementSet keep = m.ground() - contract - remove;
  const int rc = m.rank(contract);
  const int r = m.rank(keep | contract) - rc;
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if ((b & contract).size() == rc && (b & keep).size() == r) {
      bases.push_back(compress(b & keep, old_index));
    }
  }
  const int size = static_cast<int>(old_index.size());
  return {Matroid::from_bases_unchecked(size, std::move(bases)),
          std::move(old_index)};
}

MatroidMinor restrict_to(const Matroid& m, ElementSet keep) {
  return delete_elements(m, m.ground() - keep);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<ElementSet> bases;
  for (ElementSet x : a.bases()) {
    for (ElementSet y : b.bases()) {
      bases.emplace_back(x.bits() | (y.bits() << a.groundsize()));
    }
  }
  return Matroid::from_bases_unchecked(a.groundsize() + b.groundsize(),
                                       std::move(bases));
}

}  // namespace smk
