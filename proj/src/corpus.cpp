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

#include "smk/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "smk/fan.hpp"
#include "smk/geometry.hpp"
#include "smk/mason.hpp"
#include "smk/moebius.hpp"

namespace smk {

using nlohmann::json;

namespace {

Instance from_codes(int n, const std::vector<std::vector<int>>& bases,
                    std::string label) {
  const GroundSet gs(n);
  Instance inst;
  inst.n = n;
  inst.kind = InstanceKind::kEnvelopingBases;
  for (const auto& b : bases) inst.bases.push_back(gs.decode_set(b));
  std::sort(inst.bases.begin(), inst.bases.end());
  inst.label = std::move(label);
  inst.provenance = "named example";
  return inst;
}

}  // namespace

Instance example_s1() {
  return from_codes(2, {{1, -2}, {-1, 2}, {-1, -2}, {1, -1}, {2, -2}}, "S1");
}

Instance example_exc() {
  return from_codes(2, {{1, 2}, {-1, -2}, {1, -1}, {2, -2}}, "EXC");
}

Instance example_e2() {
  const std::vector<std::vector<int>> atoms = {{1, 2}, {-1, -2}, {3}, {-3}};
  std::vector<std::vector<int>> bases;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      for (int x : atoms[i]) {
        for (int y : atoms[j]) bases.push_back({x, y});
      }
    }
  }
  return from_codes(3, bases, "E2");
}

std::vector<Instance> generate_corpus(int max_n, std::uint64_t seed) {
  if (max_n < 1 || max_n > 4) {
    throw std::invalid_argument("generate_corpus: max_n must be in [1, 4]");
  }
  std::vector<Instance> out;
  std::set<std::pair<int, std::vector<ElementSet>>> seen;
  auto add = [&](Instance inst, const RankedSympMatroid& s) {
    if (!seen.emplace(s.n(), s.env().bases()).second) return false;
    out.push_back(std::move(inst));
    return true;
  };

  std::vector<Instance> roots;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 2; k <= n; ++k) {
      Instance u;
      u.n = n;
      u.kind = InstanceKind::kUniform;
      u.k = k;
      u.label = "U*_{" + std::to_string(k) + "," + std::to_string(n) + "}";
      u.provenance = "uniform family";
      roots.push_back(u);
    }
  }
  if (max_n >= 2) {
    roots.push_back(example_s1());
    roots.push_back(example_exc());
  }
  if (max_n >= 3) roots.push_back(example_e2());

  std::vector<std::pair<Instance, RankedSympMatroid>> realized;
  for (const Instance& inst : roots) {
    RankedSympMatroid s = realize(inst);
    if (add(inst, s)) realized.emplace_back(inst, std::move(s));
  }

  // One round of minors of the roots.
  for (const auto& [parent, s] : realized) {
    const GroundSet& gs = s.ground();
    auto try_minor = [&](auto make, const std::string& what) {
      try {
        const MatroidMinor m = make();
        if (m.matroid.groundsize() < 2) return;
        RankedSympMatroid child(GroundSet(m.matroid.groundsize() / 2),
                                m.matroid);
        add(enveloping_instance(child, parent.label + " " + what,
                                "minor of " + parent.label),
            child);
      } catch (const NotAdmissible&) {
      } catch (const NoAdmissibleBasis&) {
      } catch (const DegenerateMinor&) {
      }
    };
    for (int p = 0; p < gs.n(); ++p) {
      try_minor([&] { return delete_pair_env(gs, s.env(), p); },
                "\\ {" + gs.name(p) + "," + gs.name(gs.star(p)) + "}");
    }
    for (int a = 0; a < gs.size(); ++a) {
      try_minor([&] { return contract_env(gs, s.env(), a); }, "/ " + gs.name(a));
    }
  }

  // Seeded random search: admissible families that are symplectic and have
  // an admissible envelope.
  std::mt19937_64 rng(seed);
  for (int n = 2; n <= std::min(max_n, 3); ++n) {
    const GroundSet gs(n);
    int hits = 0;
    for (int attempt = 0; attempt < 400 && hits < 2; ++attempt) {
      const int k = std::uniform_int_distribution<int>(2, n)(rng);
      std::vector<ElementSet> family;
      for (ElementSet s : k_subsets(gs.size(), k)) {
        if (gs.is_admissible(s) && (rng() & 1u)) family.push_back(s);
      }
      if (family.empty() || !is_symplectic(gs, family)) continue;
      try {
        RankedSympMatroid s(gs, minimal_enveloping(gs, family));
        const std::string label =
            "random-n" + std::to_string(n) + "-" + std::to_string(hits);
        if (add(enveloping_instance(s, label,
                                    "search-found, seed " + std::to_string(seed)),
                s)) {
          ++hits;
        }
      } catch (const NotFound&) {
      } catch (const MultipleMinima&) {
      }
    }
  }
  return out;
}

std::vector<std::string> all_check_groups() {
  return {"axioms", "structure", "moebius", "geometry", "fan", "mason"};
}

namespace {

bool exc_like(const RankedSympMatroid& s) {
  const auto& b = s.bases();
  return s.n() == 2 && s.rank() == 2 && b.size() == 2 &&
         b[1] == s.ground().star(b[0]);
}

void run_axioms(const RankedSympMatroid& s, GroupResult& r) {
  const GroundSet& gs = s.ground();
  const SetLattice l = flats_lattice(s);
  r.checks["admissible"] = is_admissible_matroid(gs, s.env());
  const CnLatticeVerdict cn = check_cn_lattice(gs, l);
  r.checks["cn_lattice"] = cn.ok;
  if (!cn.ok) r.findings["cn_lattice_failure"] = cn.detail;
  r.checks["lattice_graded"] = l.is_graded();
  r.checks["symplectic"] = is_symplectic(gs, s.bases());
  r.checks["maximal_basis_admissible"] = maximal_basis_admissible_check(s);
  r.checks["round_trip"] = RankedSympMatroid(gs, s.env()).bases() == s.bases();
}

void run_structure(const RankedSympMatroid& s, GroupResult& r) {
  const GroundSet& gs = s.ground();
  r.checks["flat_dichotomy"] = flat_dichotomy_check(gs, s.env());
  r.checks["strong_admissibility"] = strong_admissibility_check(s);
  r.checks["inadmissible_deletion"] = inadmissible_deletion_check(s);
  r.checks["covered_flats"] = covered_flats_check(s);
  r.checks["connectivity"] = connectivity_check(s);
  r.checks["codim_one_chains"] = chains_connected_in_codim_one(flats_lattice(s));
  if (s.rank() >= 2) {
    r.checks["inadmissible_flat_lattice"] = inadmissible_flat_lattice_check(s);
  }
  if (s.rank() >= 3) {
    bool ok = true;
    json skipped = json::array();
    for (int a = 0; a < gs.size(); ++a) {
      try {
        ok = psi_bijection(s, a).bijective && ok;
      } catch (const DegenerateMinor&) {
        skipped.push_back(gs.encode(a));
      } catch (const DecompositionFailure& e) {
        ok = false;
        r.findings["psi_failure"] = e.what();
      }
    }
    r.checks["psi_bijective"] = ok;
    if (!skipped.empty()) r.findings["psi_degenerate_minors"] = skipped;
  }
}

void run_moebius(const RankedSympMatroid& s, GroupResult& r) {
  const GroundSet& gs = s.ground();
  const SetLattice l = flats_lattice(s);
  const std::int64_t mu = mobius_s(s);
  r.findings["mobius"] = mu;
  r.checks["boolean_expansion"] = mu == boolean_expansion(l);
  bool weisner = true;
  for (int atom : l.atoms()) weisner = weisner_check(l, atom) && weisner;
  r.checks["weisner"] = weisner;
  bool lemma = true;
  for (int a = 0; a < gs.size(); ++a) {
    for (int k = 1; k < s.rank(); ++k) lemma = flat_sum_identity(s, a, k) && lemma;
  }
  r.checks["flat_sum_identity"] = lemma;
  r.checks["x_correction"] = x_correction_identity_check(s);
  r.checks["sign_alternation"] = sign_alternation_check(s);
  bool ordinary = true;
  const ElementSet coloops = s.env().coloops();
  for (int a = 0; a < gs.size(); ++a) {
    if (!coloops.contains(a)) {
      ordinary = ordinary_mobius_identities_check(s.env(), a) && ordinary;
    }
  }
  r.checks["ordinary_identities"] = ordinary;
  if (s.rank() >= 3) {
    bool ok = true;
    json coloop_pairs = json::array();
    for (int a = 0; a < gs.size(); ++a) {
      if (is_coloop_pair(s, a).coloop) {
        coloop_pairs.push_back(gs.encode(a));
        continue;
      }
      ok = deletion_contraction_check(s, a) && ok;
    }
    r.checks["deletion_contraction"] = ok;
    r.findings["coloop_elements"] = coloop_pairs;
  }
}

void run_geometry(const RankedSympMatroid& s, GroupResult& r) {
  const GroundSet& gs = s.ground();
  const int d = dim(polytope(s));
  r.findings["dim"] = d;
  r.checks["dim"] = exc_like(s) ? d == 1 : d == s.n();
  const int components = static_cast<int>(s.env().components().size());
  r.checks["env_dim"] = dim(polytope(s.env())) == gs.size() - components;
  r.checks["gelfand_serganova"] = gelfand_serganova_check(gs, s.bases());
  bool membership = true;
  for (ElementSet b : s.env().bases()) {
    if (gs.is_admissible(b)) continue;
    const EnvMembership m = env_membership_check(s, b);
    membership = m.predicted == m.actual && membership;
  }
  r.checks["env_membership"] = membership;
  const HvReport hv = h_eq_v_check(s);
  r.checks["v_in_h"] = hv.v_in_h;
  r.findings["h_eq_v"] = to_string(hv.verdict);
  if (s.rank() >= 3) r.checks["h_eq_v"] = hv.verdict == HvVerdict::kEqual;
}

void run_fan(const RankedSympMatroid& s, const SuiteOptions& o, GroupResult& r) {
  const GroundSet& gs = s.ground();
  const Fan fan = bergman_fan(s);
  const int top = fan.top_dim();
  r.checks["unimodular"] = unimodularity_check(fan);
  r.checks["unimodular_env"] =
      unimodularity_check(bergman_fan_ordinary(gs, s.env()));
  r.checks["env_fan"] = env_fan_check(s);
  r.checks["refinement"] = refinement_check(s, o.samples, o.seed);
  r.checks["loopless_face"] = loopless_face_check(gs, s.env(), o.samples, o.seed);
  r.checks["codim_one_fan"] = codim_one_connected(fan);
  const WeightVector ones(fan.cones(top).size(), 1);
  r.checks["balancing_one"] = balancing_check(fan, ones, top);
  const MinkowskiWeights mw = mw_group(fan, top);
  const TypeClasses cd = type_classes(s, fan, TypeTarget::kD);
  const TypeClasses cd1 = type_classes(s, fan, TypeTarget::kDPlus1);
  bool constant = true;
  for (const WeightVector& g : mw.generators) {
    for (auto [i, j] : cd.type_pairs) constant = g[i] == g[j] && constant;
  }
  r.checks["mw_constant_on_type_pairs"] = constant;
  const bool d_ok = mw.rank == cd.rank_class_count;
  const bool d1_ok = mw.rank == cd1.rank_class_count;
  r.checks["mw_matches_type_classes"] = d_ok || d1_ok;
  r.checks["transversal_flat"] = transversal_flat_check(s);
  r.findings["mw_rank"] = mw.rank;
  r.findings["classes_d"] = cd.rank_class_count;
  r.findings["classes_d_plus_1"] = cd1.rank_class_count;
  r.findings["type_class_reading"] =
      d_ok ? (d1_ok ? "both" : "d") : (d1_ok ? "d_plus_1" : "neither");
  r.findings["rays"] = fan.rays().size();
  r.findings["max_cones"] = fan.cones(top).size();
  if (fan.cones(top).size() <= 64) {
    r.findings["cones_meet_in_faces"] = fan_intersection_check(fan);
  }
}

void run_mason(const RankedSympMatroid& s, GroupResult& r) {
  const CountReport c = count_report(s);
  r.findings["S"] = c.s_counts;
  r.findings["I"] = c.i_counts;
  r.findings["J"] = c.j_counts;
  try {
    r.checks["counting_identity"] = counting_identity_check(s);
  } catch (const ParityViolation& e) {
    r.checks["counting_identity"] = false;
    r.findings["parity_violation"] = e.what();
  }
  if (s.rank() >= 2) r.checks["class_sizes"] = class_size_check(s);
  if (s.rank() == 3) r.checks["rank3_log_concave"] = rank3_check(s).ok();
  r.checks["env_ultra_log_concave"] =
      is_log_concave(c.i_counts, 3, s.ground().size());
  r.findings["S_log_concave"] = is_log_concave(c.s_counts, 1, 0);
}

}  // namespace

GroupResult run_group(const std::string& group, const RankedSympMatroid& s,
                      const SuiteOptions& options) {
  GroupResult r;
  if (group == "axioms") {
    run_axioms(s, r);
  } else if (group == "structure") {
    run_structure(s, r);
  } else if (group == "moebius") {
    run_moebius(s, r);
  } else if (group == "geometry") {
    run_geometry(s, r);
  } else if (group == "fan") {
    run_fan(s, options, r);
  } else if (group == "mason") {
    run_mason(s, r);
  } else {
    throw std::invalid_argument("unknown check group '" + group + "'");
  }
  return r;
}

SuiteResult run_suite(const std::vector<Instance>& corpus,
                      const SuiteOptions& options) {
  std::vector<std::string> groups;
  for (const std::string& g : all_check_groups()) {
    if (options.groups.empty() || options.groups.count(g)) groups.push_back(g);
  }
  for (const std::string& g : options.groups) {
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
      throw std::invalid_argument("unknown check group '" + g + "'");
    }
  }

  std::vector<json> entries(corpus.size());
  std::vector<int> status(corpus.size(), 0);  // 0 pass, 1 fail, 2 invalid
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const Instance& inst = corpus[i];
      json e;
      e["label"] = inst.label;
      e["provenance"] = inst.provenance;
      e["n"] = inst.n;
      e["kind"] = to_string(inst.kind);
      try {
        const RankedSympMatroid s = realize(inst);
        e["rank"] = s.rank();
        e["bases"] = s.bases().size();
        SuiteOptions local = options;
        local.seed = options.seed + i;
        json failed = json::array();
        for (const std::string& g : groups) {
          GroupResult r;
          try {
            r = run_group(g, s, local);
          } catch (const std::exception& ex) {
            r.checks["completed"] = false;
            r.findings["exception"] = ex.what();
          }
          for (const auto& [name, ok] : r.checks) {
            e["checks"][g][name] = ok;
            if (!ok) failed.push_back(g + "." + name);
          }
          if (!r.findings.empty()) e["findings"][g] = r.findings;
        }
        e["failed"] = failed;
        status[i] = failed.empty() ? 0 : 1;
      } catch (const ExchangeViolation& ex) {
        const GroundSet gs = inst.ground();
        e["certificate"] = {{"type", "ExchangeViolation"},
                            {"B1", encode_set(gs, ex.b1)},
                            {"B2", encode_set(gs, ex.b2)},
                            {"a", gs.encode(ex.a)}};
        e["failed"] = json::array({"axioms.exchange"});
        status[i] = 1;
      } catch (const NotAdmissible& ex) {
        e["certificate"] = {{"type", "NotAdmissible"},
                            {"detail", ex.what()},
                            {"witness", encode_set(inst.ground(), ex.witness)}};
        e["failed"] = json::array({"axioms.admissible"});
        status[i] = 1;
      } catch (const std::exception& ex) {
        e["error"] = ex.what();
        status[i] = 2;
      }
      e["status"] = status[i] == 0 ? "pass" : status[i] == 1 ? "fail" : "invalid";
      entries[i] = std::move(e);
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SuiteResult result;
  json& report = result.report;
  report["instances"] = json::array();
  json failures = json::array();
  int passed = 0, failed = 0, invalid = 0;
  std::optional<std::size_t> minimal;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    report["instances"].push_back(entries[i]);
    if (status[i] == 0) ++passed;
    if (status[i] == 2) ++invalid;
    if (status[i] == 1) {
      ++failed;
      for (const auto& name : entries[i]["failed"]) {
        failures.push_back({{"instance", corpus[i].label}, {"check", name}});
      }
      auto size = [&](std::size_t x) {
        return std::make_pair(corpus[x].n, corpus[x].bases.size());
      };
      if (!minimal || size(i) < size(*minimal)) minimal = i;
    }
  }
  report["summary"] = {{"instances", corpus.size()},
                       {"passed", passed},
                       {"failed", failed},
                       {"invalid", invalid}};
  if (corpus.empty()) report["summary"]["note"] = "0 instances";
  report["failures"] = failures;
  report["minimal_failing_instance"] =
      minimal ? to_json(corpus[*minimal]) : json(nullptr);
  report["options"] = {{"groups", groups},
                       {"samples", options.samples},
                       {"seed", options.seed}};
  result.exit_code = invalid > 0 ? 2 : failed > 0 ? 1 : 0;
  return result;
}

}  // namespace smk
