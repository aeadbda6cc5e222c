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

// Exact dense linear algebra over a field scalar (typically mpq_rational)
// and Smith normal form over an integral scalar.

#ifndef SMK_LINALG_HPP_
#define SMK_LINALG_HPP_

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace smk {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Mat<Rational>;
using QVector = Vec<Rational>;

// "p/q", always with a denominator.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

template <typename Derived>
QVector to_rational(const Eigen::MatrixBase<Derived>& v) {
  QVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

template <typename Scalar>
struct Echelon {
  Mat<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> m = a;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    const Scalar lead = m(row, col);
    m.row(row) /= lead;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col) != Scalar(0)) {
        const Scalar f = m(r, col);
        m.row(r) -= f * m.row(row);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& a) {
  return static_cast<Eigen::Index>(rref(a).pivots.size());
}

// Columns form a basis of {x : a x = 0}.
template <typename Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat<Scalar> basis = Mat<Scalar>::Zero(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], k) = -e.reduced(r, free_cols[k]);
    }
  }
  return basis;
}

// Whether v lies in the column span of a.
template <typename DerivedA, typename DerivedV>
bool in_column_span(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() == 0) return v.isZero();
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, v;
  return exact_rank(a) == exact_rank(aug);
}

// Scales a rational vector to a primitive integer vector.
QVector primitive_integer(const QVector& v);

// Elementary divisors of an integer matrix (nonzero diagonal of its Smith
// normal form).
template <typename Derived>
std::vector<typename Derived::Scalar> elementary_divisors(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> m = a;
  std::vector<Scalar> out;
  Eigen::Index t = 0;
  auto abs_value = [](const Scalar& x) { return x < Scalar(0) ? Scalar(-x) : x; };
  while (t < m.rows() && t < m.cols()) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    Eigen::Index pr = -1;
    Eigen::Index pc = -1;
    for (Eigen::Index r = t; r < m.rows(); ++r) {
      for (Eigen::Index c = t; c < m.cols(); ++c) {
        if (m(r, c) != Scalar(0) &&
            (pr < 0 || abs_value(m(r, c)) < abs_value(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    m.row(pr).swap(m.row(t));
    m.col(pc).swap(m.col(t));
    bool clean = true;
    for (Eigen::Index r = t + 1; r < m.rows(); ++r) {
      const Scalar q = m(r, t) / m(t, t);
      m.row(r) -= q * m.row(t);
      if (m(r, t) != Scalar(0)) clean = false;
    }
    for (Eigen::Index c = t + 1; c < m.cols(); ++c) {
      const Scalar q = m(t, c) / m(t, t);
      m.col(c) -= q * m.col(t);
      if (m(t, c) != Scalar(0)) clean = false;
    }
    if (!clean) continue;
    // The pivot must divide the whole trailing block.
    bool divides = true;
    for (Eigen::Index r = t + 1; r < m.rows() && divides; ++r) {
      for (Eigen::Index c = t + 1; c < m.cols(); ++c) {
        if (m(r, c) % m(t, t) != Scalar(0)) {
          m.row(t) += m.row(r);
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;
    out.push_back(abs_value(m(t, t)));
    ++t;
  }
  return out;
}

}  // namespace smk

#endif  // SMK_LINALG_HPP_
