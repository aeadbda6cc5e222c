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

// Acceptance run over the n <= 4 corpus. Prints one PASS/FAIL line per
// criterion. Criteria that fail on known counterexamples are compared with
// the pinned counterexample sets; the exit status is non-zero only when an
// outcome differs from what is recorded here.

#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "smk/corpus.hpp"
#include "smk/geometry.hpp"
#include "smk/mason.hpp"
#include "smk/moebius.hpp"
#include "smk/ortho.hpp"

namespace {

using nlohmann::json;
using smk::ElementSet;
using smk::GroundSet;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  // For criteria with a recorded falsification: observed failures must
  // equal this set exactly.
  std::optional<std::set<std::string>> pinned;
  std::set<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.insert(what);
    }
  }
  bool as_expected() const { return pinned ? failures == *pinned : pass; }
};

int unexpected = 0;

void report(int id, const std::string& name, const Verdict& v) {
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << ")";
  if (!v.failures.empty()) {
    std::cout << ": " << v.failures.size() << " failing";
    int shown = 0;
    for (const auto& f : v.failures) {
      if (shown++ == 6) {
        std::cout << " ...";
        break;
      }
      std::cout << (shown == 1 ? " [" : ", ") << f;
    }
    std::cout << "]";
  }
  if (v.pinned && !v.pass) {
    std::cout << (v.as_expected() ? "; known falsification, matches recorded counterexamples"
                                  : "; DIFFERS from recorded counterexamples");
  }
  std::cout << "\n";
  for (const auto& note : v.notes) std::cout << "    " << note << "\n";
  if (!v.as_expected()) ++unexpected;
}

// Runs `fn(label, entry)` on each instance of the suite report.
template <typename F>
void each(const json& report, F&& fn) {
  for (const json& e : report["instances"]) fn(e["label"].get<std::string>(), e);
}

bool check(const json& e, const std::string& group, const std::string& name) {
  return e.contains("checks") && e["checks"].contains(group) &&
         e["checks"][group].contains(name) && e["checks"][group][name].get<bool>();
}

bool has(const json& e, const std::string& group, const std::string& name) {
  return e.contains("checks") && e["checks"].contains(group) &&
         e["checks"][group].contains(name);
}

void require_checks(Verdict& v, const json& report, const std::string& group,
                    const std::vector<std::string>& names, bool optional = false) {
  each(report, [&](const std::string& label, const json& e) {
    for (const auto& n : names) {
      if (optional && !has(e, group, n)) continue;
      v.require(check(e, group, n), label + ":" + n);
    }
  });
}

std::int64_t mobius_by_recursion(const smk::RankedSympMatroid& s) {
  std::vector<ElementSet> family;
  for (ElementSet f : s.env().flats()) {
    if (s.ground().is_admissible(f)) family.push_back(f);
  }
  family.push_back(s.ground().full());
  std::vector<std::int64_t> mu(family.size(), 0);
  mu[0] = 1;
  for (std::size_t y = 1; y < family.size(); ++y) {
    for (std::size_t z = 0; z < y; ++z) {
      if (family[z].subset_of(family[y])) mu[y] -= mu[z];
    }
  }
  return mu.back();
}

std::vector<std::vector<ElementSet>> admissible_families(const GroundSet& gs, int k) {
  std::vector<ElementSet> pool;
  for (ElementSet s : smk::k_subsets(gs.size(), k)) {
    if (gs.is_admissible(s)) pool.push_back(s);
  }
  std::vector<std::vector<ElementSet>> out;
  for (std::uint32_t pick = 1; pick < (1u << pool.size()); ++pick) {
    std::vector<ElementSet> f;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((pick >> i) & 1u) f.push_back(pool[i]);
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

int main() {
  const std::uint64_t seed = 7;
  const std::vector<smk::Instance> corpus = smk::generate_corpus(4, seed);
  smk::SuiteOptions options;
  options.samples = 10;
  options.seed = seed;
  const smk::SuiteResult suite = smk::run_suite(corpus, options);
  const json& r = suite.report;
  std::cout << "corpus: " << corpus.size() << " instances (n <= 4, seed " << seed
            << "), suite exit code " << suite.exit_code << "\n";
  const std::set<std::string> search_hits = {"random-n3-0", "random-n3-1"};

  {
    Verdict v;
    require_checks(v, r, "axioms",
                   {"admissible", "cn_lattice", "symplectic", "maximal_basis_admissible"});
    each(r, [&](const std::string& label, const json& e) {
      v.require(e["status"] != "invalid", label + ":realizable");
    });
    report(1, "axioms", v);
  }
  {
    Verdict v;
    v.pinned = std::set<std::string>{};
    for (const auto& l : search_hits) v.pinned->insert(l + ":psi_bijective");
    require_checks(v, r, "structure",
                   {"flat_dichotomy", "strong_admissibility", "inadmissible_deletion",
                    "covered_flats", "connectivity"});
    require_checks(v, r, "structure", {"psi_bijective"}, true);
    const GroundSet gs(3);
    std::vector<ElementSet> sum;
    for (const auto& c : std::vector<std::vector<int>>{
             {1, -2, 3}, {1, -2, -3}, {-1, 2, 3}, {-1, 2, -3}, {-1, -2, 3}, {-1, -2, -3}}) {
      sum.push_back(gs.decode_set(c));
    }
    bool not_found = false;
    try {
      smk::minimal_enveloping(gs, sum);
    } catch (const smk::NotFound&) {
      not_found = true;
    }
    v.require(not_found, "S1+S2:envelope_not_found");
    v.notes.push_back(std::string("S1 (+) S2 minimal_enveloping: ") +
                      (not_found ? "NotFound" : "found"));
    report(2, "structure lemmas", v);
  }
  {
    Verdict v;
    require_checks(v, r, "moebius",
                   {"boolean_expansion", "weisner", "flat_sum_identity", "sign_alternation",
                    "x_correction"});
    require_checks(v, r, "moebius", {"deletion_contraction"}, true);
    const auto u22 = smk::uniform_symp(2, 2);
    const auto s1 = smk::realize(smk::example_s1());
    v.require(mobius_by_recursion(u22) == 3 && smk::mobius_s(u22) == 3, "mu(U*_{2,2}) = 3");
    v.require(mobius_by_recursion(s1) == 2 && smk::mobius_s(s1) == 2, "mu(S1) = 2");
    std::ostringstream cc;
    cc << "coloop correction closed form vs alternating sum:";
    for (int n = 2; n <= 5; ++n) {
      const auto c = smk::coloop_correction_term(n);
      cc << " n=" << n << " " << c.closed_form << "/" << c.alternating_sum;
    }
    v.notes.push_back(cc.str());
    report(3, "Moebius", v);
  }
  {
    Verdict v;
    v.pinned = std::set<std::string>{};
    for (const auto& l : search_hits) v.pinned->insert(l + ":h_eq_v");
    require_checks(v, r, "geometry", {"dim", "env_membership", "v_in_h"});
    each(r, [&](const std::string& label, const json& e) {
      if (e["rank"].get<int>() >= 3) {
        v.require(check(e, "geometry", "h_eq_v"), label + ":h_eq_v");
      } else {
        v.notes.push_back("rank 2 " + label + ": " +
                          e["findings"]["geometry"]["h_eq_v"].get<std::string>());
      }
    });
    int compared = 0;
    for (int n = 1; n <= 2; ++n) {
      const GroundSet gs(n);
      for (int k = 1; k <= n; ++k) {
        for (const auto& f : admissible_families(gs, k)) {
          ++compared;
          v.require(smk::gelfand_serganova_check(gs, f) == smk::is_symplectic(gs, f),
                    "gs_vs_orders n=" + std::to_string(n) + " " + gs.format(f.front()));
        }
      }
    }
    const GroundSet g3(3);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 100; ++t) {
      const int k = 1 + t % 3;
      std::vector<ElementSet> f;
      while (f.empty()) {
        for (ElementSet s : smk::k_subsets(6, k)) {
          if (g3.is_admissible(s) && (rng() & 1u)) f.push_back(s);
        }
      }
      ++compared;
      v.require(smk::gelfand_serganova_check(g3, f) == smk::is_symplectic(g3, f),
                "gs_vs_orders n=3 sample " + std::to_string(t));
    }
    v.notes.push_back("Gelfand-Serganova vs order check: " + std::to_string(compared) +
                      " families compared");
    report(4, "polytopes", v);
  }
  {
    Verdict v;
    require_checks(v, r, "fan",
                   {"unimodular", "unimodular_env", "env_fan", "refinement", "balancing_one",
                    "mw_constant_on_type_pairs", "mw_matches_type_classes"});
    std::map<std::string, int> winners;
    each(r, [&](const std::string& label, const json& e) {
      const json& f = e["findings"]["fan"];
      winners[f["type_class_reading"].get<std::string>()]++;
      if (label == "U*_{2,2}") v.require(f["mw_rank"] == 2, "mw(U*_{2,2}) = 2");
      if (label == "U*_{2,3}") v.require(f["mw_rank"] == 3, "mw(U*_{2,3}) = 3");
    });
    std::string w = "type-class interpretation matching mw rank:";
    for (const auto& [k, c] : winners) w += " " + k + "=" + std::to_string(c);
    v.notes.push_back(w);
    report(5, "fans", v);
  }
  {
    Verdict v;
    require_checks(v, r, "mason", {"counting_identity", "class_sizes"});
    require_checks(v, r, "mason", {"rank3_log_concave"}, true);
    const auto c = smk::count_report(smk::uniform_symp(3, 3));
    v.require(c.s_counts[3] == 8 && c.i_counts[3] == 20 && c.j_counts[2] == 12,
              "anchor 8 = 20 - 12");
    v.require(c.s_counts[2] == 12 && c.i_counts[2] == 15, "anchor 12 = 15 - 3");
    v.require(6 * (c.i_counts[3] - c.j_counts[2]) == 48 &&
                  (c.i_counts[2] - 3) * (c.i_counts[2] - 3) == 144,
              "anchor 48 <= 144");
    report(6, "counting", v);
  }
  {
    Verdict v;
    // Families without an admissible envelope, by n.
    const std::map<int, int> recorded = {{1, 2}, {2, 4}, {3, 28}};
    std::set<std::string> pinned;
    for (int n = 1; n <= 3; ++n) {
      const auto families = smk::enumerate_lagrangian(n);
      int missing = 0;
      for (const auto& b : families) {
        v.require(smk::parity_check(b.ground, b.bases),
                  "parity n=" + std::to_string(n) + " " + b.ground.format(b.bases.front()));
        bool ok = false;
        try {
          ok = smk::envelope_theorem_check(b);
        } catch (const smk::NotFound&) {
        } catch (const smk::MultipleMinima&) {
        }
        if (!ok) ++missing;
      }
      const std::string tag = "n=" + std::to_string(n) + ": " + std::to_string(missing) +
                              " of " + std::to_string(families.size()) + " without envelope";
      if (missing > 0) v.require(false, tag);
      pinned.insert("n=" + std::to_string(n) + ": " + std::to_string(recorded.at(n)) +
                    " of " + std::to_string(families.size()) + " without envelope");
    }
    v.pinned = pinned;
    report(7, "orthogonal matroids", v);
  }
  {
    Verdict v;
    const auto again = smk::run_suite(smk::generate_corpus(4, seed), options);
    v.require(again.report.dump() == r.dump(), "suite report differs between runs");
    const auto a = smk::run_suite(smk::generate_corpus(3, seed), options).report.dump();
    const auto b = smk::run_suite(smk::generate_corpus(3, seed), options).report.dump();
    v.require(a == b, "max-n 3 report differs between runs");
    report(8, "determinism", v);
  }

  std::cout << (unexpected == 0 ? "all outcomes match the recorded expectations\n"
                                : std::to_string(unexpected) + " unexpected outcome(s)\n");
  return unexpected == 0 ? 0 : 1;
}
