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

#include "smk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace smk {

using nlohmann::json;

ParseError::ParseError(const std::string& what, int line_, int column_)
    : std::runtime_error(what + " at line " + std::to_string(line_) +
                         ", column " + std::to_string(column_)),
      line(line_),
      column(column_) {}

ValidationError::ValidationError(const std::string& path_,
                                 const std::string& what)
    : std::runtime_error(path_ + ": " + what), path(path_) {}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kEnvelopingBases:
      return "enveloping_bases";
    case InstanceKind::kSymplecticBases:
      return "symplectic_bases";
    case InstanceKind::kUniform:
      return "uniform";
    case InstanceKind::kOrthogonal:
      return "orthogonal";
  }
  return "enveloping_bases";
}

json encode_set(const GroundSet& gs, ElementSet s) {
  return json(gs.encode_set(s));
}

json encode_family(const GroundSet& gs, const std::vector<ElementSet>& family) {
  json out = json::array();
  for (ElementSet s : family) out.push_back(encode_set(gs, s));
  return out;
}

json to_json(const Instance& inst) {
  json j;
  j["n"] = inst.n;
  j["kind"] = to_string(inst.kind);
  if (inst.kind == InstanceKind::kUniform) {
    j["k"] = inst.k;
  } else {
    j["bases"] = encode_family(inst.ground(), inst.bases);
  }
  if (!inst.label.empty()) j["label"] = inst.label;
  if (!inst.provenance.empty()) j["provenance"] = inst.provenance;
  return j;
}

namespace {

int require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ValidationError(path, "expected an integer");
  return j.get<int>();
}

std::string optional_string(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_string()) throw ValidationError(key, "expected a string");
  return j[key].get<std::string>();
}

}  // namespace

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("$", "expected an object");
  Instance inst;
  if (!j.contains("n")) throw ValidationError("n", "missing");
  inst.n = require_int(j["n"], "n");
  if (inst.n < 1 || inst.n > GroundSet::kMaxPairs / 2) {
    throw ValidationError("n", "out of range");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ValidationError("kind", "missing or not a string");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "enveloping_bases") {
    inst.kind = InstanceKind::kEnvelopingBases;
  } else if (kind == "symplectic_bases") {
    inst.kind = InstanceKind::kSymplecticBases;
  } else if (kind == "uniform") {
    inst.kind = InstanceKind::kUniform;
  } else if (kind == "orthogonal") {
    inst.kind = InstanceKind::kOrthogonal;
  } else {
    throw ValidationError("kind", "unknown kind '" + kind + "'");
  }
  inst.label = optional_string(j, "label");
  inst.provenance = optional_string(j, "provenance");

  const GroundSet gs(inst.n);
  if (inst.kind == InstanceKind::kUniform) {
    if (!j.contains("k")) throw ValidationError("k", "missing");
    inst.k = require_int(j["k"], "k");
    if (inst.k < 1 || inst.k > inst.n) {
      throw ValidationError("k", "must satisfy 1 <= k <= n");
    }
    return inst;
  }
  if (!j.contains("bases") || !j["bases"].is_array()) {
    throw ValidationError("bases", "missing or not an array");
  }
  const json& bases = j["bases"];
  if (bases.empty()) throw ValidationError("bases", "empty family");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const std::string at = "bases[" + std::to_string(i) + "]";
    if (!bases[i].is_array()) throw ValidationError(at, "expected an array");
    ElementSet b;
    for (std::size_t t = 0; t < bases[i].size(); ++t) {
      const std::string here = at + "[" + std::to_string(t) + "]";
      const int code = require_int(bases[i][t], here);
      int e = 0;
      try {
        e = gs.decode(code);
      } catch (const std::invalid_argument& err) {
        throw ValidationError(here, err.what());
      }
      if (b.contains(e)) throw ValidationError(here, "duplicate element");
      b = b.with(e);
    }
    if (b.size() != static_cast<int>(bases[0].size())) {
      throw ValidationError(at, "bases differ in size");
    }
    if (inst.kind != InstanceKind::kEnvelopingBases && !gs.is_admissible(b)) {
      throw ValidationError(at, "basis is not admissible");
    }
    inst.bases.push_back(b);
  }
  std::sort(inst.bases.begin(), inst.bases.end());
  if (std::adjacent_find(inst.bases.begin(), inst.bases.end()) !=
      inst.bases.end()) {
    throw ValidationError("bases", "duplicate basis");
  }
  return inst;
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
  return instance_from_json(j);
}

std::string dump_instance(const Instance& inst) {
  return to_json(inst).dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump_instance(inst);
}

RankedSympMatroid realize(const Instance& inst) {
  const GroundSet gs = inst.ground();
  switch (inst.kind) {
    case InstanceKind::kUniform:
      return uniform_symp(inst.k, inst.n);
    case InstanceKind::kEnvelopingBases:
      return RankedSympMatroid(gs, Matroid::from_bases(gs.size(), inst.bases));
    case InstanceKind::kSymplecticBases:
    case InstanceKind::kOrthogonal:
      return RankedSympMatroid(gs, minimal_enveloping(gs, inst.bases));
  }
  throw std::logic_error("unknown instance kind");
}

Instance enveloping_instance(const RankedSympMatroid& s, std::string label,
                             std::string provenance) {
  Instance inst;
  inst.n = s.n();
  inst.kind = InstanceKind::kEnvelopingBases;
  inst.bases = s.env().bases();
  inst.label = std::move(label);
  inst.provenance = std::move(provenance);
  return inst;
}

}  // namespace smk
