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

#include "smk/fan.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "smk/geometry.hpp"
#include "smk/lp.hpp"

namespace smk {

namespace {

std::vector<std::uint32_t> key_of(const Cone& c) {
  std::vector<std::uint32_t> key;
  for (ElementSet f : c.chain) key.push_back(f.bits());
  return key;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int x, int y) { parent_[find(x)] = find(y); }
  // Component ids numbered by first appearance.
  std::vector<int> labels(int* count) {
    std::vector<int> id(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      const int root = find(static_cast<int>(i));
      if (id[root] < 0) id[root] = next++;
      out[i] = id[root];
    }
    *count = next;
    return out;
  }

 private:
  std::vector<int> parent_;
};

Cone without(const Cone& c, std::size_t i) {
  Cone out = c;
  out.chain.erase(out.chain.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

}  // namespace

Fan::Fan(GroundSet gs, Kind kind, std::vector<ElementSet> proper_flats)
    : gs_(gs), kind_(kind), flats_(std::move(proper_flats)) {
  std::sort(flats_.begin(), flats_.end(), [](ElementSet x, ElementSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  cones_.push_back({Cone{}});
  while (true) {
    std::vector<Cone> next;
    for (const Cone& c : cones_.back()) {
      for (ElementSet f : flats_) {
        if (!c.chain.empty() &&
            (f == c.chain.back() || !c.chain.back().subset_of(f))) {
          continue;
        }
        Cone longer = c;
        longer.chain.push_back(f);
        next.push_back(std::move(longer));
      }
    }
    if (next.empty()) break;
    cones_.push_back(std::move(next));
  }
  index_.resize(cones_.size());
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    for (std::size_t i = 0; i < cones_[k].size(); ++i) {
      index_[k][key_of(cones_[k][i])] = static_cast<int>(i);
    }
  }
}

int Fan::ambient() const {
  return kind_ == Kind::kSymplectic ? gs_.n() : gs_.size();
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& level : cones_) {
    for (const Cone& c : level) {
      const bool maximal = std::none_of(
          flats_.begin(), flats_.end(), [&](ElementSet f) {
            Cone longer = c;
            longer.chain.push_back(f);
            std::sort(longer.chain.begin(), longer.chain.end(),
                      [](ElementSet x, ElementSet y) { return x.size() < y.size(); });
            for (std::size_t i = 1; i < longer.chain.size(); ++i) {
              if (longer.chain[i - 1] == longer.chain[i] ||
                  !longer.chain[i - 1].subset_of(longer.chain[i])) {
                return false;
              }
            }
            return true;
          });
      if (maximal) out.push_back(c);
    }
  }
  return out;
}

QVector Fan::ray(ElementSet flat) const {
  return kind_ == Kind::kSymplectic ? to_rational(gs_.signed_vector(flat))
                                    : to_rational(gs_.unsigned_vector(flat));
}

QMatrix Fan::generators(const Cone& c) const {
  QMatrix out(ambient(), c.dim());
  for (int i = 0; i < c.dim(); ++i) out.col(i) = ray(c.chain[i]);
  return out;
}

QMatrix Fan::span_matrix(const Cone& c) const {
  if (kind_ == Kind::kSymplectic) return generators(c);
  QMatrix out(ambient(), c.dim() + 1);
  out.leftCols(c.dim()) = generators(c);
  out.col(c.dim()) = QVector::Ones(ambient());
  return out;
}

int Fan::index_of(const Cone& c) const {
  if (c.dim() >= static_cast<int>(index_.size())) return -1;
  const auto it = index_[c.dim()].find(key_of(c));
  return it == index_[c.dim()].end() ? -1 : it->second;
}

Fan bergman_fan(const RankedSympMatroid& s) {
  const SetLattice l = flats_lattice(s);
  std::vector<ElementSet> proper;
  for (int f = 1; f < l.top(); ++f) proper.push_back(l.element(f));
  return Fan(s.ground(), Fan::Kind::kSymplectic, std::move(proper));
}

Fan bergman_fan_ordinary(const GroundSet& gs, const Matroid& m) {
  std::vector<ElementSet> proper;
  for (ElementSet f : m.flats()) {
    if (!f.empty() && f != m.ground()) proper.push_back(f);
  }
  return Fan(gs, Fan::Kind::kOrdinary, std::move(proper));
}

bool unimodularity_check(const Fan& fan) {
  for (int k = 1; k <= fan.top_dim(); ++k) {
    for (const Cone& c : fan.cones(k)) {
      const QMatrix q = fan.span_matrix(c);
      const Mat<Integer> z = q.unaryExpr(
          [](const Rational& x) { return Integer(numerator(x)); });
      const std::vector<Integer> d = elementary_divisors(z);
      if (static_cast<Eigen::Index>(d.size()) != z.cols()) return false;
      for (const Integer& x : d) {
        if (x != 1) return false;
      }
    }
  }
  return true;
}

namespace {

// Whether some point of cone(a) n cone(b) (mod e_J when `lineality`) puts
// positive weight on a generator of `a` outside `common`.
bool meets_outside_face(const QMatrix& a, const QMatrix& b,
                        const std::vector<char>& common, bool lineality) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index extra = lineality ? 2 : 0;
  const Eigen::Index vars = a.cols() + b.cols() + extra + 1;
  QMatrix lhs = QMatrix::Zero(rows + 1, vars);
  lhs.topLeftCorner(rows, a.cols()) = a;
  lhs.block(0, a.cols(), rows, b.cols()) = -b;
  if (lineality) {
    lhs.block(0, a.cols() + b.cols(), rows, 1) = QVector::Ones(rows);
    lhs.block(0, a.cols() + b.cols() + 1, rows, 1) = -QVector::Ones(rows);
  }
  QVector rhs = QVector::Zero(rows + 1);
  QVector obj = QVector::Zero(vars);
  for (Eigen::Index i = 0; i < a.cols(); ++i) {
    if (!common[i]) {
      lhs(rows, i) = 1;
      obj(i) = 1;
    }
  }
  lhs(rows, vars - 1) = 1;  // slack
  rhs(rows) = 1;
  const LpResult r = maximize(lhs, rhs, obj);
  return r.status == LpStatus::kOptimal && r.value > 0;
}

}  // namespace

bool fan_intersection_check(const Fan& fan) {
  const std::vector<Cone> top = fan.maximal_cones();
  const bool lineality = fan.kind() == Fan::Kind::kOrdinary;
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      const Cone& x = top[i];
      const Cone& y = top[j];
      auto shared = [](const Cone& p, const Cone& q) {
        std::vector<char> out;
        for (ElementSet f : p.chain) {
          out.push_back(std::find(q.chain.begin(), q.chain.end(), f) !=
                        q.chain.end());
        }
        return out;
      };
      const QMatrix gx = fan.generators(x);
      const QMatrix gy = fan.generators(y);
      if (meets_outside_face(gx, gy, shared(x, y), lineality) ||
          meets_outside_face(gy, gx, shared(y, x), lineality)) {
        return false;
      }
    }
  }
  return true;
}

bool env_fan_check(const RankedSympMatroid& s) {
  const GroundSet& gs = s.ground();
  const Fan ordinary = bergman_fan_ordinary(gs, s.env());
  const Fan symp = bergman_fan(s);
  std::set<std::vector<std::uint32_t>> images;
  for (int k = 0; k <= ordinary.top_dim(); ++k) {
    for (const Cone& c : ordinary.cones(k)) {
      Cone prefix;
      bool in_prefix = true;
      for (ElementSet f : c.chain) {
        const QVector image = env_map(ordinary.ray(f));
        if (image.isZero()) {
          in_prefix = false;
          continue;
        }
        if (!in_prefix || !gs.is_admissible(f) || image != symp.ray(f)) {
          return false;
        }
        prefix.chain.push_back(f);
      }
      if (symp.index_of(prefix) < 0) return false;
      std::vector<std::uint32_t> key;
      for (ElementSet f : prefix.chain) key.push_back(f.bits());
      images.insert(std::move(key));
    }
  }
  std::size_t total = 0;
  for (int k = 0; k <= symp.top_dim(); ++k) total += symp.cones(k).size();
  return images.size() == total;
}

bool refinement_check(const RankedSympMatroid& s, int samples,
                      std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  const Fan fan = bergman_fan(s);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(1, 10);
  for (const Cone& c : fan.cones(fan.top_dim())) {
    const QMatrix g = fan.generators(c);
    const std::vector<ElementSet> reference =
        face_bases(s.ground(), s.bases(), g.rowwise().sum());
    for (int t = 0; t < samples; ++t) {
      QVector w = QVector::Zero(g.rows());
      for (Eigen::Index i = 0; i < g.cols(); ++i) w += Rational(coef(rng)) * g.col(i);
      if (face_bases(s.ground(), s.bases(), w) != reference) return false;
    }
  }
  return true;
}

namespace {

// nu lies in B(M) (mod e_J) iff each of its proper upper level sets is a
// flat.
bool in_bergman_support(const Matroid& m, const QVector& nu) {
  std::vector<Rational> levels(nu.data(), nu.data() + nu.size());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (std::size_t t = 1; t < levels.size(); ++t) {
    ElementSet upper;
    for (Eigen::Index e = 0; e < nu.size(); ++e) {
      if (nu(e) >= levels[t]) upper = upper.with(static_cast<int>(e));
    }
    if (!m.is_flat(upper)) return false;
  }
  return true;
}

}  // namespace

bool loopless_face_check(const GroundSet& gs, const Matroid& m, int samples,
                         std::uint64_t seed) {
  const Fan fan = bergman_fan_ordinary(gs, m);
  auto consistent = [&](const QVector& nu) {
    return face_matroid(m, nu).is_loopless() == in_bergman_support(m, nu);
  };
  for (int k = 0; k <= fan.top_dim(); ++k) {
    for (const Cone& c : fan.cones(k)) {
      const QVector nu = fan.generators(c).rowwise().sum();
      if (!in_bergman_support(m, nu) || !consistent(nu)) return false;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int t = 0; t < samples; ++t) {
    QVector nu(m.groundsize());
    for (Eigen::Index e = 0; e < nu.size(); ++e) nu(e) = entry(rng);
    if (!consistent(nu)) return false;
  }
  return true;
}

bool balancing_check(const Fan& fan, const WeightVector& c, int k) {
  if (k < 1 || k > fan.top_dim()) throw std::invalid_argument("cone dimension out of range");
  const std::vector<Cone>& sigma = fan.cones(k);
  if (c.size() != sigma.size()) throw std::invalid_argument("weight size");
  const std::vector<Cone>& tau = fan.cones(k - 1);
  std::vector<QVector> sums(tau.size(), QVector::Zero(fan.ambient()));
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = 0; j < sigma[i].chain.size(); ++j) {
      const int t = fan.index_of(without(sigma[i], j));
      sums[t] += Rational(c[i]) * fan.ray(sigma[i].chain[j]);
    }
  }
  for (std::size_t t = 0; t < tau.size(); ++t) {
    if (!in_column_span(fan.span_matrix(tau[t]), sums[t])) return false;
  }
  return true;
}

MinkowskiWeights mw_group(const Fan& fan, int k) {
  if (k < 1 || k > fan.top_dim()) throw std::invalid_argument("cone dimension out of range");
  const std::vector<Cone>& sigma = fan.cones(k);
  const std::vector<Cone>& tau = fan.cones(k - 1);
  // Rows of the orthogonal complement of each span(tau).
  std::vector<QMatrix> complement(tau.size());
  std::vector<Eigen::Index> offset(tau.size() + 1, 0);
  for (std::size_t t = 0; t < tau.size(); ++t) {
    complement[t] = nullspace(fan.span_matrix(tau[t]).transpose()).transpose();
    offset[t + 1] = offset[t] + complement[t].rows();
  }
  QMatrix constraints = QMatrix::Zero(offset.back(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = 0; j < sigma[i].chain.size(); ++j) {
      const int t = fan.index_of(without(sigma[i], j));
      constraints.block(offset[t], i, complement[t].rows(), 1) +=
          complement[t] * fan.ray(sigma[i].chain[j]);
    }
  }
  const QMatrix kernel = nullspace(constraints);
  MinkowskiWeights out;
  out.rank = static_cast<int>(kernel.cols());
  for (Eigen::Index g = 0; g < kernel.cols(); ++g) {
    const QVector v = primitive_integer(kernel.col(g));
    WeightVector w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      w[i] = numerator(v(i)).convert_to<std::int64_t>();
    }
    out.generators.push_back(std::move(w));
  }
  return out;
}

TypeClasses type_classes(const RankedSympMatroid& s, const Fan& fan,
                         TypeTarget target) {
  const GroundSet& gs = s.ground();
  const int d = fan.top_dim();
  const std::vector<Cone>& top = fan.cones(d);
  const int count = static_cast<int>(top.size());
  const int wanted = target == TypeTarget::kD ? s.rank() - 1 : s.rank();
  UnionFind by_rank(count);
  UnionFind by_move(count);
  TypeClasses out;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const ElementSet f = top[i].chain.back();
      const ElementSet g = top[j].chain.back();
      if (s.env().rank(gs.pair_closure(f) & gs.pair_closure(g)) == wanted) {
        by_rank.unite(i, j);
      }
      const bool type1 = f == g;
      const ElementSet f_below = d >= 2 ? top[i].chain[d - 2] : ElementSet();
      const ElementSet g_below = d >= 2 ? top[j].chain[d - 2] : ElementSet();
      const bool type2 = f_below == g_below && f.intersects(gs.star(g));
      if (type1 || type2) {
        by_move.unite(i, j);
        out.type_pairs.emplace_back(i, j);
      }
    }
  }
  out.rank_classes = by_rank.labels(&out.rank_class_count);
  out.move_classes = by_move.labels(&out.move_class_count);
  return out;
}

bool transversal_flat_check(const RankedSympMatroid& s) {
  const GroundSet& gs = s.ground();
  const SetLattice l = flats_lattice(s);
  bool has = false;
  for (int f = 1; f < l.top(); ++f) {
    if (gs.is_transversal(l.element(f), gs.full())) has = true;
  }
  if (!has) return true;
  const Fan fan = bergman_fan(s);
  return mw_group(fan, fan.top_dim()).rank == 1;
}

bool codim_one_connected(const Fan& fan) {
  const int d = fan.top_dim();
  const std::vector<Cone>& top = fan.cones(d);
  if (top.empty()) return true;
  UnionFind uf(static_cast<int>(top.size()));
  std::map<std::vector<std::uint32_t>, int> facet_owner;
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = 0; j < top[i].chain.size(); ++j) {
      const auto key = key_of(without(top[i], j));
      const auto [it, fresh] = facet_owner.emplace(key, static_cast<int>(i));
      if (!fresh) uf.unite(it->second, static_cast<int>(i));
    }
  }
  int count = 0;
  uf.labels(&count);
  return count == 1;
}

}  // namespace smk
