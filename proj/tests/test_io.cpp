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

#include <filesystem>

#include "smk/corpus.hpp"
#include "smk/io.hpp"

namespace smk {
namespace {

std::string validation_path(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ValidationError& e) {
    return e.path;
  }
  return "";
}

TEST(Io, UniformInstance) {
  const Instance inst = parse_instance(R"({"n":3,"kind":"uniform","k":2})");
  EXPECT_EQ(inst.kind, InstanceKind::kUniform);
  const RankedSympMatroid s = realize(inst);
  EXPECT_EQ(s.bases(), uniform_symp(2, 3).bases());
}

TEST(Io, RoundTrip) {
  for (const Instance& inst : generate_corpus(3, 7)) {
    EXPECT_EQ(parse_instance(dump_instance(inst)), inst) << inst.label;
  }
  const auto path = std::filesystem::temp_directory_path() / "smk_io_roundtrip.json";
  save_instance(example_s1(), path.string());
  EXPECT_EQ(load_instance(path.string()), example_s1());
  EXPECT_EQ(realize(load_instance(path.string())).bases().size(), 3u);
  std::filesystem::remove(path);
}

TEST(Io, SymplecticBasesAreEnveloped) {
  const Instance inst = parse_instance(
      R"({"n":2,"kind":"symplectic_bases","bases":[[1,-2],[-1,2],[-1,-2]]})");
  EXPECT_EQ(realize(inst).env(), realize(example_s1()).env());
}

TEST(Io, ValidationErrors) {
  EXPECT_EQ(validation_path(R"({"n":2,"kind":"symplectic_bases","bases":[[1,0]]})"),
            "bases[0][1]");
  EXPECT_EQ(validation_path(R"({"n":2,"kind":"uniform","k":3})"), "k");
  EXPECT_EQ(validation_path(R"({"n":2,"kind":"uniform"})"), "k");
  EXPECT_EQ(validation_path(R"({"n":2,"kind":"nope"})"), "kind");
  EXPECT_EQ(validation_path(R"({"n":9,"kind":"uniform","k":1})"), "n");
  EXPECT_EQ(validation_path(R"({"n":2,"kind":"symplectic_bases","bases":[[1,-1]]})"),
            "bases[0]");
  EXPECT_EQ(validation_path(R"({"n":2,"kind":"symplectic_bases","bases":[[1],[1,2]]})"),
            "bases[1]");
  EXPECT_EQ(validation_path(R"({"n":2,"kind":"symplectic_bases","bases":[[1],[1]]})"),
            "bases");
  EXPECT_EQ(validation_path(R"([1,2])"), "$");
}

TEST(Io, ParseErrorPosition) {
  try {
    parse_instance("{\"n\": 2,\n  \"kind\": }");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_GT(e.column, 0);
  }
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), std::runtime_error);
}

}  // namespace
}  // namespace smk
