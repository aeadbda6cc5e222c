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

#ifndef SMK_MASON_HPP_
#define SMK_MASON_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "smk/sympcore.hpp"

namespace smk {

class ParityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Independent sets of size k.
std::int64_t count_independent(const Matroid& m, int k);
// Subsets of size k of bases of S.
std::int64_t count_independent(const RankedSympMatroid& s, int k);

struct CountReport {
  std::vector<std::int64_t> s_counts;  // S_k, k = 0..r
  std::vector<std::int64_t> i_counts;  // I_k of env, k = 0..r
  std::vector<std::int64_t> j_counts;  // J_k of the inadmissible-flat matroid
};
CountReport count_report(const RankedSympMatroid& s);

// S_k = I_k - (k-1)/2 J_{k-1} for k = 1..r. Throws ParityViolation if
// (k-1) J_{k-1} is odd.
bool counting_identity_check(const RankedSympMatroid& s);

// For k >= 2, size-k inadmissible independent sets of env sharing I u I*
// form classes of size 2^(k-2)(k-1), size-(k-1) independent sets of N form
// classes of size 2^(k-1), and both produce the same set of keys I u I*.
bool class_size_check(const RankedSympMatroid& s);

// Variant 1: a_k^2 >= a_{k-1} a_{k+1}; 2: with factor (1+1/k); 3: with
// (1+1/k)(1+1/(n-k)). One verdict per k = 1..len-2.
std::vector<bool> log_concavity_report(const std::vector<std::int64_t>& seq,
                                       int variant, int n);
bool is_log_concave(const std::vector<std::int64_t>& seq, int variant, int n);

struct Rank3Report {
  bool log_concave = false;        // S_2^2 >= S_1 S_3
  bool i3_bound = false;           // 2n I_3 <= (2/3) I_2^2
  bool j2_bound = false;           // J_2 >= n
  bool chain = false;              // (I_2-n)^2 >= (2/3)I_2^2 - 2n^2 >= 2n(I_3-J_2)
  bool ok() const { return log_concave && i3_bound && j2_bound && chain; }
};
// Throws std::invalid_argument unless rank(S) = 3.
Rank3Report rank3_check(const RankedSympMatroid& s);

}  // namespace smk

#endif  // SMK_MASON_HPP_
