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

#ifndef SMK_CORPUS_HPP_
#define SMK_CORPUS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "smk/io.hpp"

namespace smk {

Instance example_s1();
Instance example_exc();
// Rank 2, n = 3, rank-1 flats {1,2}, {1*,2*}, {3}, {3*}.
Instance example_e2();

// Uniform families for 2 <= k <= n <= max_n, the named examples S1, EXC
// and E2, every surviving pair deletion and element contraction of those,
// and seeded random search hits. Deterministic in (max_n, seed). Requires max_n <= 4.
std::vector<Instance> generate_corpus(int max_n, std::uint64_t seed);

// Check groups: axioms, structure, moebius, geometry, fan, mason.
std::vector<std::string> all_check_groups();

struct SuiteOptions {
  std::set<std::string> groups;  // empty selects every group
  int samples = 10;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 pass, 1 falsified property, 2 invalid input
};

SuiteResult run_suite(const std::vector<Instance>& corpus,
                      const SuiteOptions& options);

// Checks of one group on one instance: assertion name -> verdict, plus
// recorded findings that are not asserted.
struct GroupResult {
  std::map<std::string, bool> checks;
  nlohmann::json findings = nlohmann::json::object();
};
GroupResult run_group(const std::string& group, const RankedSympMatroid& s,
                      const SuiteOptions& options);

}  // namespace smk

#endif  // SMK_CORPUS_HPP_
