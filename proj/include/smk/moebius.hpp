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

#ifndef SMK_MOEBIUS_HPP_
#define SMK_MOEBIUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "smk/sympcore.hpp"

namespace smk {

std::int64_t mobius_s(const RankedSympMatroid& s);

// Sets B of atoms of the flat lattice of env whose join is an inadmissible
// flat other than J.
struct XCorrection {
  std::vector<std::vector<ElementSet>> terms;
  std::int64_t value = 0;
};
XCorrection x_correction(const RankedSympMatroid& s);
// mu(S) = mu(env) + x_correction(S).value
bool x_correction_identity_check(const RankedSympMatroid& s);

// Sum of mu(0, F) over rank-k flats of L(S) containing a equals the same
// sum over flats containing a*.
bool flat_sum_identity(const RankedSympMatroid& s, int a, int k);

struct ColoopVerdict {
  bool coloop = false;
  bool degenerate = false;  // the closure deletion has no admissible basis
  std::string detail;
};
// Whether deleting the closure of {a, a*} leaves the envelope of some
// U*_{m,m}.
ColoopVerdict is_coloop_pair(const RankedSympMatroid& s, int a);

// mu(S) = mu(S \ cl{a,a*}) - mu(S / cl a) - mu(S / cl a*), each side
// evaluated on the lattice of admissible flats of the envelope minor.
// Throws std::invalid_argument below rank 3 and CoLoopInput on coloop pairs.
bool deletion_contraction_check(const RankedSympMatroid& s, int a);

// (-1)^(rank y - rank x) mu(x, y) > 0 for all x <= y in L(S).
bool sign_alternation_check(const RankedSympMatroid& s);

struct ColoopCorrection {
  std::int64_t closed_form = 0;      // (-1)^n (n/2) C(2n-4, n-2)
  std::int64_t alternating_sum = 0;  // -sum_{k=0}^{n-4} (-1)^k n C(2n-4, k)
  bool agree = false;
};
// Throws std::invalid_argument for n < 2.
ColoopCorrection coloop_correction_term(int n);

}  // namespace smk

#endif  // SMK_MOEBIUS_HPP_
