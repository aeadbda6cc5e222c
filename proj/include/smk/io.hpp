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

// JSON instances. Elements are signed integers (+i for i, -i for i*).

#ifndef SMK_IO_HPP_
#define SMK_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "smk/sympcore.hpp"

namespace smk {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line;
  int column;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& path, const std::string& what);
  std::string path;
};

enum class InstanceKind {
  kEnvelopingBases,
  kSymplecticBases,
  kUniform,
  kOrthogonal
};
std::string to_string(InstanceKind kind);

struct Instance {
  int n = 0;
  InstanceKind kind = InstanceKind::kEnvelopingBases;
  int k = 0;                      // uniform only
  std::vector<ElementSet> bases;  // sorted; empty for uniform
  std::string label;
  std::string provenance;

  GroundSet ground() const { return GroundSet(n); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

nlohmann::json encode_set(const GroundSet& gs, ElementSet s);
nlohmann::json encode_family(const GroundSet& gs,
                             const std::vector<ElementSet>& family);

nlohmann::json to_json(const Instance& inst);
// Throws ValidationError naming the offending field.
Instance instance_from_json(const nlohmann::json& j);

// Throws ParseError (with 1-based line and column) or ValidationError.
Instance parse_instance(const std::string& text);
std::string dump_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// The ranked symplectic matroid described by the instance. Symplectic and
// orthogonal inputs go through minimal_enveloping.
RankedSympMatroid realize(const Instance& inst);

Instance enveloping_instance(const RankedSympMatroid& s, std::string label,
                             std::string provenance);

}  // namespace smk

#endif  // SMK_IO_HPP_
