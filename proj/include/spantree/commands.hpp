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

#ifndef SPANTREE_COMMANDS_HPP_
#define SPANTREE_COMMANDS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "spantree/instances.hpp"
#include "spantree/report.hpp"

namespace spantree {

struct SolveRequest {
  Algorithm algorithm = Algorithm::kNstm;
  double eps = 0.1;
  int k = 1;  // clamped to q with a warning
  std::uint64_t seed = 0;
  bool oracle = false;
};

// Runs one solver on one instance. Throws DomainError for k < 1 and
// SingularMinorError for a disconnected base graph.
RunReport solve(const InstanceSpec& spec, const SolveRequest& request);

inline constexpr int kBenchMaxVertices = 20000;

struct BenchConfig {
  std::vector<int> sizes;
  std::vector<int> budgets = {10};
  std::vector<Algorithm> algorithms = {Algorithm::kNstm, Algorithm::kExact};
  double eps = 0.1;
  int repetitions = 1;
  std::uint64_t seed = 0;
};

struct BenchRow {
  int n = 0;
  std::size_t m = 0;
  std::size_t q = 0;
  int k = 0;
  std::string algorithm;
  int repetition = 0;
  double wall_time_seconds = 0.0;
  double log_gain = 0.0;
};

// Random sparse instances with q = n candidates, one row per
// (size, budget, algorithm, repetition), ordered in that nesting. Throws
// DomainError on an empty size list or a size above kBenchMaxVertices.
std::vector<BenchRow> bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace spantree

#endif  // SPANTREE_COMMANDS_HPP_
