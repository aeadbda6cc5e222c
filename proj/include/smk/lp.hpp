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

#ifndef SMK_LP_HPP_
#define SMK_LP_HPP_

#include <vector>

#include "smk/linalg.hpp"

namespace smk {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  QVector x;
};

// maximize c.x subject to a x = b, x >= 0. Two-phase simplex with Bland's
// rule, exact.
LpResult maximize(const QMatrix& a, const QVector& b, const QVector& c);

// Whether p is a convex combination of the columns of `points`.
bool in_convex_hull(const QMatrix& points, const QVector& p);

// Whether columns i and j of `points` span an edge of their convex hull.
// Assumes both are vertices.
bool is_edge(const QMatrix& points, Eigen::Index i, Eigen::Index j);

}  // namespace smk

#endif  // SMK_LP_HPP_
