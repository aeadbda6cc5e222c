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

#include <random>

#include "oracles.hpp"
#include "smk/corpus.hpp"
#include "smk/geometry.hpp"

namespace smk {
namespace {

TEST(Polytope, Dimensions) {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 2; k <= n; ++k) EXPECT_EQ(dim(polytope(uniform_symp(k, n))), n);
  }
  EXPECT_EQ(dim(polytope(realize(example_exc()))), 1);
  EXPECT_EQ(dim(polytope(realize(example_s1()))), 2);
  EXPECT_EQ(dim(polytope(realize(example_e2()))), 3);
  EXPECT_EQ(dim(polytope(Matroid::uniform(2, 4))), 3);
  const Matroid split = direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3));
  EXPECT_EQ(dim(polytope(split)), 3);
}

TEST(Polytope, OctahedronEdges) {
  const VPolytope p = polytope(Matroid::uniform(2, 4));
  EXPECT_EQ(p.count(), 6);
  EXPECT_TRUE(is_irredundant(p));
  EXPECT_EQ(edges(p).size(), 12u);
}

TEST(Polytope, EnvMap) {
  QVector v(4);
  v << 1, 0, 0, 1;
  const QVector w = env_map(v);
  ASSERT_EQ(w.size(), 2);
  EXPECT_EQ(w(0), Rational(1));
  EXPECT_EQ(w(1), Rational(-1));
}

TEST(GelfandSerganova, ExhaustiveUpToTwoPairs) {
  for (int n = 1; n <= 2; ++n) {
    const GroundSet gs(n);
    for (int k = 1; k <= n; ++k) {
      std::vector<ElementSet> pool;
      for (ElementSet s : k_subsets(gs.size(), k)) {
        if (gs.is_admissible(s)) pool.push_back(s);
      }
      for (std::uint32_t pick = 1; pick < (1u << pool.size()); ++pick) {
        std::vector<ElementSet> family;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if ((pick >> i) & 1u) family.push_back(pool[i]);
        }
        ASSERT_EQ(gelfand_serganova_check(gs, family), oracle::is_symplectic(gs, family));
      }
    }
  }
}

TEST(GelfandSerganova, RandomFamiliesAtThreePairs) {
  const GroundSet gs(3);
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 100; ++t) {
    const auto family = oracle::random_family(gs, 1 + t % 3, rng);
    ASSERT_EQ(gelfand_serganova_check(gs, family), is_symplectic(gs, family));
  }
}

TEST(EnvMembership, PredictionMatches) {
  for (const Instance& inst : generate_corpus(3, 7)) {
    const RankedSympMatroid s = realize(inst);
    for (ElementSet b : s.env().bases()) {
      if (s.ground().is_admissible(b)) continue;
      const EnvMembership m = env_membership_check(s, b);
      EXPECT_EQ(m.predicted, m.actual) << inst.label << " " << s.ground().format(b);
    }
  }
  const RankedSympMatroid u = uniform_symp(2, 2);
  EXPECT_THROW(env_membership_check(u, u.bases().front()), std::invalid_argument);
}

TEST(HRepresentation, Verdicts) {
  for (const RankedSympMatroid& s : {uniform_symp(3, 3), uniform_symp(2, 3),
                                     uniform_symp(2, 2)}) {
    const HvReport r = h_eq_v_check(s);
    EXPECT_EQ(r.verdict, HvVerdict::kEqual);
    EXPECT_TRUE(r.extra_vertices.empty());
  }
  const HvReport s1 = h_eq_v_check(realize(example_s1()));
  EXPECT_TRUE(s1.v_in_h);
  EXPECT_EQ(s1.verdict, HvVerdict::kVSubsetH);
  EXPECT_EQ(s1.extra_vertices.size(), 2u);
  EXPECT_EQ(to_string(HvVerdict::kVSubsetH), "V_subset_H");
}

TEST(HRepresentation, ContainsEveryBasis) {
  const RankedSympMatroid s = realize(example_e2());
  const HPolytope h = h_representation(s);
  const VPolytope p = polytope(s);
  for (int c = 0; c < p.count(); ++c) EXPECT_TRUE(h.contains(p.vertices.col(c)));
}

TEST(Faces, MaximizingDirection) {
  const Matroid m = Matroid::uniform(2, 4);
  QVector dir = QVector::Zero(4);
  dir(0) = 1;
  const Matroid f = face_matroid(m, dir);
  EXPECT_EQ(f.bases().size(), 3u);
  EXPECT_EQ(f.coloops(), ElementSet::singleton(0));
  const RankedSympMatroid u = uniform_symp(2, 2);
  QVector sdir = QVector::Zero(2);
  sdir(0) = 1;
  EXPECT_EQ(face_bases(u.ground(), u.bases(), sdir).size(), 2u);
}

}  // namespace
}  // namespace smk
