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

#include "smk/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "smk/lp.hpp"

namespace smk {

QVector env_map(const QVector& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("env: odd length");
  const Eigen::Index n = v.size() / 2;
  return v.head(n) - v.tail(n);
}

VPolytope symplectic_polytope(const GroundSet& gs,
                              std::span<const ElementSet> bases) {
  VPolytope p;
  p.vertices.resize(gs.n(), static_cast<Eigen::Index>(bases.size()));
  for (std::size_t j = 0; j < bases.size(); ++j) {
    p.vertices.col(j) = to_rational(gs.signed_vector(bases[j]));
  }
  return p;
}

VPolytope polytope(const Matroid& m) {
  VPolytope p;
  p.vertices = QMatrix::Zero(m.groundsize(), m.bases().size());
  for (std::size_t j = 0; j < m.bases().size(); ++j) {
    for (int e : m.bases()[j].elements()) p.vertices(e, j) = 1;
  }
  return p;
}

int dim(const VPolytope& p) {
  if (p.count() == 0) return -1;
  QMatrix diff(p.ambient(), p.count() - 1);
  for (int j = 1; j < p.count(); ++j) {
    diff.col(j - 1) = p.vertices.col(j) - p.vertices.col(0);
  }
  return static_cast<int>(exact_rank(diff));
}

bool is_irredundant(const VPolytope& p) {
  for (int j = 0; j < p.count(); ++j) {
    QMatrix others(p.ambient(), p.count() - 1);
    for (int k = 0, c = 0; k < p.count(); ++k) {
      if (k != j) others.col(c++) = p.vertices.col(k);
    }
    if (in_convex_hull(others, p.vertices.col(j))) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> edges(const VPolytope& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.count(); ++i) {
    for (int j = i + 1; j < p.count(); ++j) {
      if (is_edge(p.vertices, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool gelfand_serganova_check(const GroundSet& gs,
                             std::span<const ElementSet> bases) {
  const VPolytope p = symplectic_polytope(gs, bases);
  for (auto [i, j] : edges(p)) {
    const QVector d = p.vertices.col(j) - p.vertices.col(i);
    std::vector<Rational> support;
    for (Eigen::Index t = 0; t < d.size(); ++t) {
      if (d(t) != 0) support.push_back(abs(d(t)));
    }
    const bool root = support.size() == 1 ||
                      (support.size() == 2 && support[0] == support[1]);
    if (!root) return false;
  }
  return true;
}

EnvMembership env_membership_check(const RankedSympMatroid& s, ElementSet b) {
  const GroundSet& gs = s.ground();
  if (!s.env().is_basis(b)) {
    throw std::invalid_argument("not a basis of the envelope");
  }
  const ElementSet pairs = b & gs.star(b);
  if (pairs.size() != 2) {
    throw std::invalid_argument("basis must contain exactly one pair");
  }
  const ElementSet rest = s.env().closure(b - pairs);
  EnvMembership out;
  out.predicted = !gs.is_transversal(rest, gs.full() - pairs);
  const QVector point = env_map(to_rational(gs.unsigned_vector(b)));
  out.actual = in_convex_hull(polytope(s).vertices, point);
  return out;
}

bool HPolytope::contains(const QVector& x) const {
  return std::all_of(rows.begin(), rows.end(), [&](const Inequality& q) {
    return q.normal.dot(x) <= q.bound;
  });
}

HPolytope h_representation(const RankedSympMatroid& s) {
  const GroundSet& gs = s.ground();
  const int n = gs.n();
  const int r = s.rank();
  HPolytope h;
  for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
    Inequality q;
    q.normal.resize(n);
    for (int i = 0; i < n; ++i) q.normal(i) = ((signs >> i) & 1u) ? -1 : 1;
    q.bound = r;
    q.source = Inequality::Source::kCrossPolytope;
    h.rows.push_back(std::move(q));
  }
  const SetLattice l = flats_lattice(s);
  for (int f = 1; f < l.top(); ++f) {
    const ElementSet flat = l.element(f);
    Inequality q;
    q.normal = to_rational(gs.signed_vector(flat));
    q.flat = flat;
    q.phi = (flat.size() == n - 1 && l.rank(f) == r - 2) ? 1 : 0;
    q.bound = l.rank(f) - q.phi;
    h.rows.push_back(std::move(q));
  }
  return h;
}

std::string to_string(HvVerdict v) {
  switch (v) {
    case HvVerdict::kEqual:
      return "equal";
    case HvVerdict::kVSubsetH:
      return "V_subset_H";
    case HvVerdict::kInconsistent:
      return "inconsistent";
  }
  return "inconsistent";
}

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Fraction-free Gaussian elimination; exact for the small integer entries
// that occur here.
std::int64_t bareiss_det(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

HvReport h_eq_v_check(const RankedSympMatroid& s) {
  const int n = s.n();
  const HPolytope h = h_representation(s);

  // Integer copy of the distinct inequalities.
  std::set<std::vector<std::int64_t>> distinct;
  for (const Inequality& q : h.rows) {
    std::vector<std::int64_t> row(n + 1);
    for (int i = 0; i < n; ++i) row[i] = q.normal(i).convert_to<std::int64_t>();
    row[n] = q.bound.convert_to<std::int64_t>();
    distinct.insert(std::move(row));
  }
  const std::vector<std::vector<std::int64_t>> rows(distinct.begin(),
                                                    distinct.end());
  const int m = static_cast<int>(rows.size());

  std::set<ElementSet> v_points(s.bases().begin(), s.bases().end());
  const VPolytope v = polytope(s);
  HvReport report;
  report.v_in_h = true;
  for (int j = 0; j < v.count(); ++j) {
    if (!h.contains(v.vertices.col(j))) report.v_in_h = false;
  }

  // Vertices as (numerators, common denominator > 0) in lowest terms.
  std::set<std::vector<std::int64_t>> h_vertices;
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  IntMatrix a(n, std::vector<std::int64_t>(n));
  while (n > 0 && m >= n) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = rows[pick[i]][j];
    }
    std::int64_t det = bareiss_det(a);
    if (det != 0) {
      std::vector<std::int64_t> point(n + 1);
      for (int col = 0; col < n; ++col) {
        IntMatrix c = a;
        for (int i = 0; i < n; ++i) c[i][col] = rows[pick[i]][n];
        point[col] = bareiss_det(c);
      }
      if (det < 0) {
        for (auto& x : point) x = -x;
        det = -det;
      }
      point[n] = det;
      bool feasible = true;
      for (const auto& row : rows) {
        std::int64_t lhs = 0;
        for (int i = 0; i < n; ++i) lhs += row[i] * point[i];
        if (lhs > row[n] * det) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        std::int64_t g = det;
        for (int i = 0; i < n; ++i) g = std::gcd(g, point[i]);
        for (auto& x : point) x /= g;
        h_vertices.insert(std::move(point));
      }
    }
    // Next n-subset in lexicographic order.
    int i = n - 1;
    while (i >= 0 && pick[i] == m - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }

  const GroundSet& gs = s.ground();
  report.h_in_v = true;
  for (const auto& point : h_vertices) {
    bool is_vertex = false;
    if (point[n] == 1) {
      ElementSet b;
      bool signed_unit = true;
      for (int i = 0; i < n; ++i) {
        if (point[i] == 1) b = b.with(i);
        else if (point[i] == -1) b = b.with(gs.star(i));
        else if (point[i] != 0) signed_unit = false;
      }
      is_vertex = signed_unit && v_points.count(b) > 0;
    }
    if (!is_vertex) {
      report.h_in_v = false;
      QVector x(n);
      for (int i = 0; i < n; ++i) x(i) = Rational(point[i], point[n]);
      report.extra_vertices.push_back(std::move(x));
    }
  }
  if (!report.v_in_h) {
    report.verdict = HvVerdict::kInconsistent;
  } else {
    report.verdict = report.h_in_v ? HvVerdict::kEqual : HvVerdict::kVSubsetH;
  }
  return report;
}

std::vector<ElementSet> face_bases(const GroundSet& gs,
                                   std::span<const ElementSet> bases,
                                   const QVector& direction) {
  std::vector<ElementSet> out;
  Rational best;
  for (ElementSet b : bases) {
    const Rational value = to_rational(gs.signed_vector(b)).dot(direction);
    if (out.empty() || value > best) {
      out.assign(1, b);
      best = value;
    } else if (value == best) {
      out.push_back(b);
    }
  }
  return out;
}

Matroid face_matroid(const Matroid& m, const QVector& direction) {
  std::vector<ElementSet> out;
  Rational best;
  for (ElementSet b : m.bases()) {
    Rational value = 0;
    for (int e : b.elements()) value += direction(e);
    if (out.empty() || value > best) {
      out.assign(1, b);
      best = value;
    } else if (value == best) {
      out.push_back(b);
    }
  }
  return Matroid::from_bases_unchecked(m.groundsize(), std::move(out));
}

}  // namespace smk
