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
#include "smk/sympcore.hpp"

namespace smk {
namespace {

std::vector<ElementSet> sets(const GroundSet& gs,
                             const std::vector<std::vector<int>>& codes) {
  std::vector<ElementSet> out;
  for (const auto& c : codes) out.push_back(gs.decode_set(c));
  std::sort(out.begin(), out.end());
  return out;
}

// Every matroid of rank k on 2n elements (n = 2), by exhaustive search.
std::vector<std::vector<ElementSet>> all_matroids_n2(int k) {
  const std::vector<ElementSet> pool = k_subsets(4, k);
  std::vector<std::vector<ElementSet>> out;
  for (std::uint32_t pick = 1; pick < (1u << pool.size()); ++pick) {
    std::vector<ElementSet> bases;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((pick >> i) & 1u) bases.push_back(pool[i]);
    }
    if (oracle::is_matroid(bases)) out.push_back(bases);
  }
  return out;
}

TEST(Admissible, ExhaustiveAgainstOracleOnFourElements) {
  const GroundSet gs(2);
  int admissible = 0;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& bases : all_matroids_n2(k)) {
      const Matroid m = Matroid::from_bases(4, bases);
      const bool want = oracle::is_admissible(gs, bases);
      ASSERT_EQ(is_admissible_matroid(gs, m), want) << gs.format(bases.front());
      admissible += want;
    }
  }
  EXPECT_GT(admissible, 0);
}

TEST(Admissible, UniformEnvelopes) {
  for (int n = 2; n <= 4; ++n) {
    const GroundSet gs(n);
    for (int k = 2; k <= n; ++k) {
      const Matroid env = uniform_envelope(k, n);
      EXPECT_TRUE(is_admissible_matroid(gs, env));
      if (n <= 3) EXPECT_TRUE(oracle::is_admissible(gs, env.bases()));
      const RankedSympMatroid s = uniform_symp(k, n);
      int binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      EXPECT_EQ(static_cast<int>(s.bases().size()), binom << k);
      EXPECT_TRUE(is_symplectic(gs, s.bases()));
    }
  }
}

TEST(Admissible, RejectsLoopsAndRankOne) {
  const GroundSet gs(2);
  // Element 2* is a loop.
  const Matroid loop = Matroid::from_bases(4, sets(gs, {{1, 2}, {1, -1}, {2, -1}}));
  const auto cert = check_admissible_matroid(gs, loop);
  EXPECT_FALSE(cert.admissible);
  EXPECT_EQ(cert.reason, AdmissibilityCertificate::Reason::kLoop);
  EXPECT_FALSE(is_admissible_matroid(gs, Matroid::uniform(1, 4)));
  EXPECT_TRUE(is_admissible_matroid(gs, Matroid::uniform(2, 4)));
  EXPECT_THROW(RankedSympMatroid(gs, loop), NotAdmissible);
}

TEST(Symplectic, NamedExamples) {
  const RankedSympMatroid s1 = realize(example_s1());
  const GroundSet& gs = s1.ground();
  EXPECT_EQ(s1.bases(), sets(gs, {{1, -2}, {-1, 2}, {-1, -2}}));
  const RankedSympMatroid exc = realize(example_exc());
  EXPECT_EQ(exc.bases(), sets(gs, {{1, 2}, {-1, -2}}));
  const RankedSympMatroid e2 = realize(example_e2());
  EXPECT_EQ(e2.bases().size(), 10u);
  for (const RankedSympMatroid* s : {&s1, &exc, &e2}) {
    EXPECT_TRUE(is_symplectic(s->ground(), s->bases()));
    EXPECT_TRUE(maximal_basis_admissible_check(*s));
    EXPECT_TRUE(check_cn_lattice(s->ground(), flats_lattice(*s)).ok);
  }
}

TEST(Symplectic, MatchesOracleExhaustivelyAtTwoPairs) {
  const GroundSet gs(2);
  for (int k = 1; k <= 2; ++k) {
    std::vector<ElementSet> pool;
    for (ElementSet s : k_subsets(4, k)) {
      if (gs.is_admissible(s)) pool.push_back(s);
    }
    for (std::uint32_t pick = 1; pick < (1u << pool.size()); ++pick) {
      std::vector<ElementSet> family;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if ((pick >> i) & 1u) family.push_back(pool[i]);
      }
      ASSERT_EQ(is_symplectic(gs, family), oracle::is_symplectic(gs, family));
    }
  }
}

TEST(Symplectic, MatchesOracleOnRandomFamilies) {
  const GroundSet gs(3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto family = oracle::random_family(gs, 1 + t % 3, rng);
    ASSERT_EQ(is_symplectic(gs, family), oracle::is_symplectic(gs, family));
  }
}

TEST(Envelope, DirectSumExampleHasNone) {
  const GroundSet gs(3);
  const auto family = sets(gs, {{1, -2, 3}, {1, -2, -3}, {-1, 2, 3},
                                {-1, 2, -3}, {-1, -2, 3}, {-1, -2, -3}});
  ASSERT_TRUE(is_symplectic(gs, family));
  EXPECT_THROW(minimal_enveloping(gs, family), NotFound);
  const auto brute = oracle::envelopes(gs, family, [&](const auto& b) {
    return oracle::is_admissible(gs, b);
  });
  EXPECT_EQ(brute.minima, 0);
}

void expect_matches_oracle(const GroundSet& gs, const std::vector<ElementSet>& family) {
  const auto brute = oracle::envelopes(gs, family, [&](const auto& b) {
    return oracle::is_admissible(gs, b);
  });
  if (brute.minima == 0) {
    EXPECT_THROW(minimal_enveloping(gs, family), NotFound);
  } else if (brute.minima > 1) {
    EXPECT_THROW(minimal_enveloping(gs, family), MultipleMinima);
  } else {
    EXPECT_EQ(minimal_enveloping(gs, family).bases(), brute.bases);
  }
}

TEST(Envelope, MatchesBruteForceAtTwoPairs) {
  const GroundSet gs(2);
  std::vector<ElementSet> pool;
  for (ElementSet s : k_subsets(4, 2)) {
    if (gs.is_admissible(s)) pool.push_back(s);
  }
  for (std::uint32_t pick = 1; pick < (1u << pool.size()); ++pick) {
    std::vector<ElementSet> family;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((pick >> i) & 1u) family.push_back(pool[i]);
    }
    expect_matches_oracle(gs, family);
  }
}

TEST(Envelope, MatchesBruteForceOnRandomSymplecticFamilies) {
  const GroundSet gs(3);
  std::mt19937_64 rng(5);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 12; ++t) {
    const auto family = oracle::random_family(gs, 2 + t % 2, rng);
    if (!oracle::is_symplectic(gs, family)) continue;
    ++tested;
    expect_matches_oracle(gs, family);
  }
  EXPECT_GT(tested, 0);
}

TEST(Envelope, RecoversUniformEnvelope) {
  const GroundSet gs(3);
  const RankedSympMatroid u = uniform_symp(3, 3);
  EXPECT_EQ(minimal_enveloping(gs, u.bases()), u.env());
}

TEST(Lattice, CnAxiomsDetectTampering) {
  const RankedSympMatroid u = uniform_symp(2, 2);
  const GroundSet& gs = u.ground();
  const SetLattice good = flats_lattice(u);
  EXPECT_TRUE(check_cn_lattice(gs, good).ok);
  std::vector<ElementSet> members = good.elements();
  members.push_back(gs.pair(0));
  const auto verdict = check_cn_lattice(gs, SetLattice::from_family(members));
  EXPECT_FALSE(verdict.ok);
  EXPECT_EQ(verdict.failing_axiom, 2);
}

TEST(Strong, UniformCounts) {
  const RankedSympMatroid u = uniform_symp(3, 3);
  EXPECT_EQ(strongly_admissible_sets(u, 3).size(), 8u);
  EXPECT_EQ(strongly_admissible_sets(u, 1).size(), 6u);
  EXPECT_EQ(strongly_admissible_sets(u, 2).size(), 12u);
}

TEST(Structure, LemmasOnNamedAndUniformInstances) {
  for (const Instance& inst : {example_s1(), example_exc(), example_e2()}) {
    const RankedSympMatroid s = realize(inst);
    EXPECT_TRUE(flat_dichotomy_check(s.ground(), s.env())) << inst.label;
    EXPECT_TRUE(strong_admissibility_check(s)) << inst.label;
    EXPECT_TRUE(inadmissible_deletion_check(s)) << inst.label;
    EXPECT_TRUE(covered_flats_check(s)) << inst.label;
    EXPECT_TRUE(connectivity_check(s)) << inst.label;
    EXPECT_TRUE(inadmissible_flat_lattice_check(s)) << inst.label;
  }
  for (int n = 3; n <= 4; ++n) {
    const RankedSympMatroid s = uniform_symp(3, n);
    EXPECT_TRUE(covered_flats_check(s));
    EXPECT_TRUE(inadmissible_flat_lattice_check(s));
  }
}

TEST(Psi, UniformRankThree) {
  const RankedSympMatroid u = uniform_symp(3, 3);
  const GroundSet& gs = u.ground();
  const PsiReport r = psi_bijection(u, gs.decode(1));
  EXPECT_TRUE(r.bijective);
  EXPECT_EQ(r.map.size(), 4u);
  const ElementSet b = gs.decode_set(std::vector<int>{2, 3});
  ASSERT_TRUE(r.map.count(b));
  EXPECT_EQ(r.map.at(b), b);
  EXPECT_THROW(psi_bijection(uniform_symp(2, 3), 0), std::invalid_argument);
}

TEST(Psi, NonUniqueDecompositionIsReported) {
  const std::vector<Instance> corpus = generate_corpus(3, 7);
  const auto it = std::find_if(corpus.begin(), corpus.end(), [](const Instance& i) {
    return i.label == "random-n3-0";
  });
  ASSERT_NE(it, corpus.end());
  const RankedSympMatroid s = realize(*it);
  int failures = 0;
  for (int a = 0; a < s.ground().size(); ++a) {
    try {
      psi_bijection(s, a);
    } catch (const DecompositionFailure&) {
      ++failures;
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Minors, PairDeletionOfUniform) {
  const RankedSympMatroid u = uniform_symp(3, 4);
  const RankedSympMatroid d = delete_pair(u, 0);
  EXPECT_EQ(d.n(), 3);
  EXPECT_EQ(d.bases(), uniform_symp(3, 3).bases());
  const RankedSympMatroid c = contract_elem(u, 0);
  EXPECT_EQ(c.bases(), uniform_symp(2, 3).bases());
}

}  // namespace
}  // namespace smk
