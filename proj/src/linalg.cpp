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

#include "smk/linalg.hpp"

#include <stdexcept>

namespace smk {

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

QVector primitive_integer(const QVector& v) {
  Integer lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v(i)));
  }
  QVector out = v * Rational(lcm);
  Integer g = 0;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(out(i)));
  }
  if (g > 1) out /= Rational(g);
  return out;
}

}  // namespace smk
