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

// Command-line front end. Every command reads or writes instance JSON and
// reports results as JSON (--json) or as a short key/value listing.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "smk/corpus.hpp"
#include "smk/fan.hpp"
#include "smk/geometry.hpp"
#include "smk/io.hpp"
#include "smk/mason.hpp"
#include "smk/moebius.hpp"
#include "smk/ortho.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFalsified = 1;
constexpr int kExitInvalid = 2;

struct Output {
  bool as_json = false;
  std::string path;

  void emit(const json& j) const {
    std::string text;
    if (as_json) {
      text = j.dump(2) + "\n";
    } else {
      for (const auto& [key, value] : j.items()) {
        text += key + ": " +
                (value.is_string() ? value.get<std::string>() : value.dump()) +
                "\n";
      }
    }
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      out << text;
    }
  }
};

int max_ground_pairs() {
  if (const char* env = std::getenv("SMK_MAX_GROUND")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("SMK_MAX_GROUND is not an integer");
    }
  }
  return 5;
}

smk::Instance load_guarded(const std::string& path) {
  smk::Instance inst = smk::load_instance(path);
  if (inst.n > max_ground_pairs()) {
    throw std::invalid_argument("n = " + std::to_string(inst.n) +
                                " exceeds the limit " +
                                std::to_string(max_ground_pairs()) +
                                " (set SMK_MAX_GROUND to override)");
  }
  return inst;
}

json rational_vector(const smk::QVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(smk::to_string(v(i)));
  return out;
}

json flats_json(const smk::RankedSympMatroid& s) {
  const smk::SetLattice l = smk::flats_lattice(s);
  json flats = json::array();
  for (int i = 0; i < l.size(); ++i) {
    flats.push_back({{"set", smk::encode_set(s.ground(), l.element(i))},
                     {"rank", l.rank(i)}});
  }
  return {{"flats", flats}, {"count", l.size()}, {"rank", s.rank()}};
}

json moebius_json(const smk::RankedSympMatroid& s, bool all_pairs) {
  const smk::GroundSet& gs = s.ground();
  json per = json::array();
  const int limit = all_pairs ? gs.size() : gs.n();
  for (int a = 0; a < limit; ++a) {
    json entry = {{"element", gs.encode(a)}};
    const bool coloop = smk::is_coloop_pair(s, a).coloop;
    entry["coloop"] = coloop;
    if (s.rank() < 3 || coloop) {
      entry["ok"] = nullptr;
    } else {
      entry["ok"] = smk::deletion_contraction_check(s, a);
    }
    per.push_back(entry);
  }
  bool lemma = true;
  for (int a = 0; a < gs.size(); ++a) {
    for (int k = 1; k < s.rank(); ++k) {
      lemma = smk::flat_sum_identity(s, a, k) && lemma;
    }
  }
  return {{"mobius", smk::mobius_s(s)},
          {"sign_ok", smk::sign_alternation_check(s)},
          {"del_contr_ok", per},
          {"lemma35_ok", lemma}};
}

json polytope_json(const smk::RankedSympMatroid& s) {
  const smk::VPolytope p = smk::polytope(s);
  json vertices = json::array();
  for (int c = 0; c < p.count(); ++c) {
    vertices.push_back(rational_vector(p.vertices.col(c)));
  }
  json rows = json::array();
  for (const smk::Inequality& q : smk::h_representation(s).rows) {
    json row = {{"normal", rational_vector(q.normal)},
                {"bound", smk::to_string(q.bound)}};
    if (q.source == smk::Inequality::Source::kFlat) {
      row["flat"] = smk::encode_set(s.ground(), q.flat);
      row["phi"] = q.phi;
    }
    rows.push_back(row);
  }
  return {{"dim", smk::dim(p)},
          {"vertices", vertices},
          {"h_rep", rows},
          {"h_eq_v", smk::to_string(smk::h_eq_v_check(s).verdict)},
          {"gs_check", smk::gelfand_serganova_check(s.ground(), s.bases())}};
}

json fan_json(const smk::RankedSympMatroid& s, int mw_dim, int samples,
              std::uint64_t seed) {
  const smk::Fan fan = smk::bergman_fan(s);
  const int k = mw_dim < 0 ? fan.top_dim() : mw_dim;
  if (k < 1 || k > fan.top_dim()) {
    throw std::invalid_argument("--mw must be in [1, " +
                                std::to_string(fan.top_dim()) + "]");
  }
  return {{"rays", fan.rays().size()},
          {"max_cones", fan.cones(fan.top_dim()).size()},
          {"unimodular", smk::unimodularity_check(fan)},
          {"refines_normal_fan", smk::refinement_check(s, samples, seed)},
          {"mw_dim", k},
          {"mw_rank", smk::mw_group(fan, k).rank},
          {"classes_d",
           smk::type_classes(s, fan, smk::TypeTarget::kD).rank_class_count},
          {"classes_d1",
           smk::type_classes(s, fan, smk::TypeTarget::kDPlus1).rank_class_count}};
}

json mason_json(const smk::RankedSympMatroid& s) {
  const smk::CountReport c = smk::count_report(s);
  json out = {{"S", c.s_counts}, {"I", c.i_counts}, {"J", c.j_counts}};
  try {
    out["identity_ok"] = smk::counting_identity_check(s);
  } catch (const smk::ParityViolation& e) {
    out["identity_ok"] = false;
    out["parity_violation"] = e.what();
  }
  return out;
}

json ortho_verdict(const smk::OrthogonalMatroid& b) {
  json out = {{"orthogonal", smk::is_orthogonal(b.ground, b.bases)},
              {"parity_ok", smk::parity_check(b.ground, b.bases)}};
  try {
    out["envelope_ok"] = smk::envelope_theorem_check(b);
  } catch (const smk::NotFound&) {
    out["envelope_ok"] = false;
    out["envelope"] = "not found";
  } catch (const smk::MultipleMinima&) {
    out["envelope_ok"] = false;
    out["envelope"] = "multiple minima";
  }
  const smk::SymplecticVerdicts v = smk::orthogonal_is_symplectic(b);
  out["symplectic_by_orders"] = v.by_orders;
  out["symplectic_by_polytope"] = v.by_polytope;
  return out;
}

bool verdict_ok(const json& v) {
  return v["orthogonal"] && v["parity_ok"] && v["envelope_ok"] &&
         v["symplectic_by_orders"] == v["symplectic_by_polytope"];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranked symplectic matroid toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t seed = 0;
  int samples = 10;
  app.add_flag("--json", out.as_json, "Emit JSON");
  app.add_option("-o,--output", out.path, "Write output to a file");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--samples", samples, "Samples per randomized check")
      ->check(CLI::PositiveNumber);

  std::string file;
  auto* gen = app.add_subcommand("gen", "Write an instance file");
  std::string family;
  int gen_n = 2, gen_k = 2;
  gen->add_option("family", family, "uniform | s1 | exc | e2")->required();
  gen->add_option("--n", gen_n, "Number of pairs (uniform)");
  gen->add_option("--k", gen_k, "Rank (uniform)");

  auto* verify = app.add_subcommand("verify", "Run property checks");
  std::vector<std::string> groups;
  verify->add_option("instance", file)->required();
  verify->add_option("--checks", groups, "Check groups (default: all)");

  auto* flats = app.add_subcommand("flats", "List the lattice of flats");
  flats->add_option("instance", file)->required();

  auto* moebius = app.add_subcommand("moebius", "Moebius invariant and identities");
  bool all_pairs = false;
  moebius->add_option("instance", file)->required();
  moebius->add_flag("--all-pairs", all_pairs, "Check every element of J");

  auto* poly = app.add_subcommand("polytope", "Matroid polytope");
  poly->add_option("instance", file)->required();

  auto* fan = app.add_subcommand("fan", "Bergman fan and Minkowski weights");
  int mw_dim = -1;
  fan->add_option("instance", file)->required();
  fan->add_option("--mw", mw_dim, "Minkowski weight dimension (default: top)");

  auto* mason = app.add_subcommand("mason", "Independent-set counts");
  mason->add_option("instance", file)->required();

  auto* ortho = app.add_subcommand("ortho", "Orthogonal matroid checks");
  int enumerate_n = 0;
  ortho->add_option("instance", file);
  ortho->add_option("--enumerate", enumerate_n,
                    "Enumerate Lagrangian orthogonal matroids on n pairs");

  auto* corpus = app.add_subcommand("corpus", "Generate the corpus and run the suite");
  int max_n = 3;
  corpus->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(1, 4));
  corpus->add_option("--checks", groups, "Check groups (default: all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      smk::Instance inst;
      if (family == "uniform") {
        inst.n = gen_n;
        inst.kind = smk::InstanceKind::kUniform;
        inst.k = gen_k;
        inst.label = "U*_{" + std::to_string(gen_k) + "," + std::to_string(gen_n) + "}";
        inst = smk::instance_from_json(smk::to_json(inst));
      } else if (family == "s1") {
        inst = smk::example_s1();
      } else if (family == "exc") {
        inst = smk::example_exc();
      } else if (family == "e2") {
        inst = smk::example_e2();
      } else {
        throw std::invalid_argument("unknown family '" + family + "'");
      }
      if (out.path.empty()) {
        std::cout << smk::dump_instance(inst);
      } else {
        smk::save_instance(inst, out.path);
      }
      return 0;
    }
    if (*corpus) {
      smk::SuiteOptions options{{groups.begin(), groups.end()}, samples, seed};
      const smk::SuiteResult r =
          smk::run_suite(smk::generate_corpus(max_n, seed), options);
      out.emit(r.report);
      return r.exit_code;
    }
    if (*ortho) {
      if (enumerate_n > 0) {
        if (enumerate_n > max_ground_pairs()) {
          throw std::invalid_argument("--enumerate exceeds SMK_MAX_GROUND");
        }
        const auto families =
            smk::enumerate_lagrangian(enumerate_n, enumerate_n > 3 ? samples : 0, seed);
        int failures = 0;
        json examples = json::array();
        for (const auto& b : families) {
          const json v = ortho_verdict(b);
          if (verdict_ok(v)) continue;
          ++failures;
          if (examples.size() < 10) {
            examples.push_back({{"bases", smk::encode_family(b.ground, b.bases)},
                                {"verdict", v}});
          }
        }
        out.emit({{"n", enumerate_n},
                  {"families", families.size()},
                  {"failures", failures},
                  {"examples", examples}});
        return failures == 0 ? 0 : kExitFalsified;
      }
      if (file.empty()) throw std::invalid_argument("ortho needs an instance or --enumerate");
      const smk::Instance inst = load_guarded(file);
      const json v = ortho_verdict({inst.ground(), inst.bases});
      out.emit(v);
      return verdict_ok(v) ? 0 : kExitFalsified;
    }

    const smk::Instance inst = load_guarded(file);
    if (*verify) {
      smk::SuiteOptions options{{groups.begin(), groups.end()}, samples, seed};
      const smk::SuiteResult r = smk::run_suite({inst}, options);
      out.emit(r.report);
      return r.exit_code;
    }
    const smk::RankedSympMatroid s = smk::realize(inst);
    if (*flats) out.emit(flats_json(s));
    if (*moebius) out.emit(moebius_json(s, all_pairs));
    if (*poly) out.emit(polytope_json(s));
    if (*fan) out.emit(fan_json(s, mw_dim, samples, seed));
    if (*mason) out.emit(mason_json(s));
    return 0;
  } catch (const smk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const smk::ValidationError& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}
