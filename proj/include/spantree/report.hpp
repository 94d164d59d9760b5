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

#ifndef SPANTREE_REPORT_HPP_
#define SPANTREE_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spantree/maximizer.hpp"

namespace spantree {

inline constexpr int kReportSchemaVersion = 1;

enum class Algorithm { kExact, kGreedyTh, kNstm };

std::string_view algorithm_name(Algorithm algorithm);
// Accepts "exact", "greedy-th" and "nstm".
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct OracleComparison {
  bool ran = false;
  std::string note;  // why the oracle was skipped
  std::vector<int> optimum;
  double optimum_log_gain = 0.0;
  // Solver gain over optimal gain; 1 when the optimum gains nothing.
  double ratio = 0.0;

  friend bool operator==(const OracleComparison&, const OracleComparison&) = default;
};

struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::string instance;
  int n = 0;
  std::size_t m = 0;
  std::size_t q = 0;
  int k = 0;
  std::string algorithm;
  double eps = 0.0;
  std::uint64_t seed = 0;
  Selection selection;
  double base_log2_trees = 0.0;
  double wall_time_seconds = 0.0;
  std::optional<OracleComparison> oracle;
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const RunReport& report);
// Throws Error on a schema mismatch or missing field.
RunReport report_from_json(const nlohmann::json& j);

std::string report_csv_header();
std::string report_csv_row(const RunReport& report);

}  // namespace spantree

#endif  // SPANTREE_REPORT_HPP_
