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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smk/matroid.hpp"
#include "smk/sympcore.hpp"

namespace smk {
namespace {

std::vector<Matroid> samples() {
  return {Matroid::uniform(2, 4), Matroid::uniform(3, 5),
          direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3)),
          uniform_envelope(3, 3), uniform_envelope(2, 3),
          Matroid::from_bases(4, {ElementSet(0b0011), ElementSet(0b0101),
                                  ElementSet(0b0110)})};
}

TEST(Matroid, RankMatchesOracle) {
  for (const Matroid& m : samples()) {
    for (std::uint32_t s = 0; s < (1u << m.groundsize()); ++s) {
      ASSERT_EQ(m.rank(ElementSet(s)), oracle::rank(m.bases(), ElementSet(s)));
    }
  }
}

TEST(Matroid, FlatsMatchOracle) {
  for (const Matroid& m : samples()) {
    std::vector<ElementSet> got = m.flats();
    std::vector<ElementSet> want = oracle::flats(m.groundsize(), m.bases());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want);
  }
}

TEST(Matroid, ExchangeViolation) {
  EXPECT_THROW(Matroid::from_bases(4, {ElementSet(0b0011), ElementSet(0b1100)}),
               ExchangeViolation);
  EXPECT_THROW(Matroid::from_bases(4, {}), EmptyFamily);
  EXPECT_THROW(Matroid::from_bases(3, {ElementSet(0b011), ElementSet(0b100)}),
               std::invalid_argument);
}

TEST(Matroid, CircuitsAndComponents) {
  const Matroid m = direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3));
  EXPECT_EQ(m.components().size(), 2u);
  EXPECT_FALSE(m.is_connected());
  EXPECT_TRUE(Matroid::uniform(2, 4).is_connected());
  EXPECT_EQ(Matroid::uniform(2, 4).circuits().size(), 4u);
  const Matroid c = Matroid::from_bases(3, {ElementSet(0b011), ElementSet(0b101)});
  EXPECT_EQ(c.coloops(), ElementSet(0b001));
  EXPECT_TRUE(c.is_loopless());
}

TEST(Matroid, MinorRankFormulas) {
  for (const Matroid& m : samples()) {
    for (std::uint32_t x = 1; x < (1u << m.groundsize()); x += 3) {
      const ElementSet xs(x);
      const MatroidMinor del = delete_elements(m, xs);
      const MatroidMinor con = contract_elements(m, xs);
      const ElementSet rest = m.ground() - xs;
      for_each_subset(rest, [&](ElementSet a) {
        ASSERT_EQ(del.matroid.rank(relabel_into(del, a)), m.rank(a));
        ASSERT_EQ(con.matroid.rank(relabel_into(con, a)), m.rank(a | xs) - m.rank(xs));
      });
    }
  }
}

TEST(Matroid, MixedMinor) {
  const Matroid m = Matroid::uniform(3, 5);
  const MatroidMinor mm = minor(m, ElementSet(0b00001), ElementSet(0b00010));
  EXPECT_EQ(mm.matroid.groundsize(), 3);
  EXPECT_EQ(mm.matroid, Matroid::uniform(2, 3));
  EXPECT_THROW(minor(m, ElementSet(1), ElementSet(1)), std::invalid_argument);
}

}  // namespace
}  // namespace smk
