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
#include "smk/lattice.hpp"
#include "smk/sympcore.hpp"

namespace smk {
namespace {

TEST(Lattice, BooleanMobius) {
  for (int m = 1; m <= 5; ++m) {
    std::vector<ElementSet> all;
    for (std::uint32_t s = 0; s < (1u << m); ++s) all.emplace_back(s);
    const SetLattice l = SetLattice::from_family(all);
    EXPECT_EQ(l.mobius_top(), m % 2 ? -1 : 1);
    EXPECT_TRUE(l.is_graded());
    EXPECT_TRUE(l.is_semimodular());
    EXPECT_TRUE(l.is_atomistic());
  }
}

TEST(Lattice, IntervalsMatchOracle) {
  for (const Matroid& m : {Matroid::uniform(2, 4), uniform_envelope(3, 3),
                           uniform_envelope(2, 3)}) {
    const SetLattice l = flat_lattice(m);
    for (int i = 0; i < l.size(); ++i) {
      for (int j = 0; j < l.size(); ++j) {
        if (!l.leq(i, j)) {
          EXPECT_EQ(l.mobius(i, j), 0);
          continue;
        }
        std::vector<ElementSet> interval;
        for (int k = 0; k < l.size(); ++k) {
          if (l.leq(i, k) && l.leq(k, j)) interval.push_back(l.element(k));
        }
        ASSERT_EQ(l.mobius(i, j), oracle::mobius(interval));
      }
    }
  }
}

TEST(Lattice, UniformMatroidValues) {
  // |mu| of U_{r,m} is C(m-1, r-1).
  EXPECT_EQ(matroid_mobius(Matroid::uniform(2, 3)), 2);
  EXPECT_EQ(matroid_mobius(Matroid::uniform(2, 4)), 3);
  EXPECT_EQ(matroid_mobius(Matroid::uniform(3, 5)), -6);
  // A coloop gives a Boolean factor; a loop kills the invariant.
  EXPECT_EQ(matroid_mobius(Matroid::from_bases(3, {ElementSet(0b011), ElementSet(0b101)})), 1);
  EXPECT_EQ(matroid_mobius(Matroid::from_bases(3, {ElementSet(0b011)})), 0);
}

TEST(Lattice, WeisnerAndBooleanExpansion) {
  for (const Matroid& m : {Matroid::uniform(2, 4), Matroid::uniform(3, 5),
                           uniform_envelope(3, 3)}) {
    const SetLattice l = flat_lattice(m);
    for (int atom : l.atoms()) EXPECT_TRUE(weisner_check(l, atom));
    EXPECT_EQ(boolean_expansion(l), l.mobius_top());
    EXPECT_TRUE(chains_connected_in_codim_one(l));
  }
}

TEST(Lattice, OrdinaryIdentities) {
  for (const Matroid& m : {Matroid::uniform(2, 4), Matroid::uniform(3, 5)}) {
    for (int a = 0; a < m.groundsize(); ++a) {
      EXPECT_TRUE(ordinary_mobius_identities_check(m, a));
    }
  }
}

TEST(Lattice, JoinMeet) {
  const SetLattice l = flat_lattice(Matroid::uniform(2, 3));
  const int a = l.atoms()[0], b = l.atoms()[1];
  EXPECT_EQ(l.join(a, b), l.top());
  EXPECT_EQ(l.meet(a, b), l.bottom());
  EXPECT_EQ(l.maximal_chains().size(), 3u);
  EXPECT_THROW(SetLattice::from_family({ElementSet(1), ElementSet(2)}),
               std::invalid_argument);
}

}  // namespace
}  // namespace smk
