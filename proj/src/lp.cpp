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

#include "smk/lp.hpp"

#include <stdexcept>

namespace smk {

namespace {

using Row = std::vector<Rational>;

// Tableau rows hold [coefficients..., rhs]; obj holds reduced costs and the
// objective value in the last slot.
struct Tableau {
  std::vector<Row> rows;
  Row obj;
  std::vector<int> basis;
  int cols = 0;  // number of variables

  void pivot(int r, int col) {
    const Rational lead = rows[r][col];
    for (auto& v : rows[r]) v /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (int k = 0; k <= cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    if (obj[col] != 0) {
      const Rational f = obj[col];
      for (int k = 0; k <= cols; ++k) obj[k] -= f * rows[r][k];
    }
    basis[r] = col;
  }

  void set_objective(const Row& c) {
    obj.assign(cols + 1, Rational(0));
    for (int j = 0; j < cols; ++j) obj[j] = -c[j];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational cb = c[basis[r]];
      if (cb == 0) continue;
      for (int k = 0; k <= cols; ++k) obj[k] += cb * rows[r][k];
    }
  }

  // Returns false if unbounded. `allowed` masks entering columns.
  bool run(const std::vector<char>& allowed) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (allowed[j] && obj[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter] <= 0) continue;
        const Rational ratio = rows[r][cols] / rows[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult maximize(const QMatrix& a, const QVector& b, const QVector& c) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (b.size() != m || c.size() != n) {
    throw std::invalid_argument("maximize: dimension mismatch");
  }
  Tableau t;
  t.cols = n + m;
  t.rows.assign(m, Row(t.cols + 1, Rational(0)));
  t.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    const bool flip = b(r) < 0;
    for (int j = 0; j < n; ++j) t.rows[r][j] = flip ? Rational(-a(r, j)) : a(r, j);
    t.rows[r][n + r] = 1;
    t.rows[r][t.cols] = flip ? Rational(-b(r)) : b(r);
    t.basis[r] = n + r;
  }

  Row phase1(t.cols, Rational(0));
  for (int r = 0; r < m; ++r) phase1[n + r] = -1;
  t.set_objective(phase1);
  std::vector<char> all(t.cols, 1);
  t.run(all);
  LpResult result;
  if (t.obj[t.cols] < 0) return result;

  // Drive artificial variables out of the basis; drop redundant rows.
  for (int r = 0; r < static_cast<int>(t.rows.size());) {
    if (t.basis[r] < n) {
      ++r;
      continue;
    }
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (t.rows[r][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      t.pivot(r, col);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + r);
      t.basis.erase(t.basis.begin() + r);
    }
  }

  Row phase2(t.cols, Rational(0));
  for (int j = 0; j < n; ++j) phase2[j] = c(j);
  t.set_objective(phase2);
  std::vector<char> original(t.cols, 0);
  for (int j = 0; j < n; ++j) original[j] = 1;
  if (!t.run(original)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = t.obj[t.cols];
  result.x = QVector::Zero(n);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.basis[r] < n) result.x(t.basis[r]) = t.rows[r][t.cols];
  }
  return result;
}

namespace {

// Rows: the coordinates of sum lambda_k v_k, then sum lambda_k = 1.
QMatrix hull_system(const QMatrix& points) {
  QMatrix a(points.rows() + 1, points.cols());
  a.topRows(points.rows()) = points;
  a.row(points.rows()).setConstant(Rational(1));
  return a;
}

}  // namespace

bool in_convex_hull(const QMatrix& points, const QVector& p) {
  if (points.cols() == 0) return false;
  QVector b(points.rows() + 1);
  b << p, Rational(1);
  const QVector zero = QVector::Zero(points.cols());
  return maximize(hull_system(points), b, zero).status == LpStatus::kOptimal;
}

bool is_edge(const QMatrix& points, Eigen::Index i, Eigen::Index j) {
  // [v_i, v_j] is an edge iff its midpoint has no convex representation
  // putting weight on another vertex.
  QVector mid(points.rows() + 1);
  mid << (points.col(i) + points.col(j)) / Rational(2), Rational(1);
  QVector c = QVector::Constant(points.cols(), Rational(1));
  c(i) = 0;
  c(j) = 0;
  const LpResult r = maximize(hull_system(points), mid, c);
  return r.status == LpStatus::kOptimal && r.value == 0;
}

}  // namespace smk
