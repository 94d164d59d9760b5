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

#ifndef SPANTREE_VERIFY_HPP_
#define SPANTREE_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spantree {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool informational = false;  // reported but never gating
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds; 0 means unlimited
};

// Seeded property checks against exact oracles. Each fails if its
// property breaks or it overruns its time limit.
CheckResult check_fan_counts();
CheckResult check_wheel_inequality();
CheckResult check_determinant_lemma(std::uint64_t seed);
CheckResult check_resistance_monotonicity(std::uint64_t seed);
CheckResult check_approx_schur(std::uint64_t seed);
CheckResult check_resistance_sketch(std::uint64_t seed);
CheckResult check_add_above_certificate(std::uint64_t seed);
CheckResult check_end_to_end(std::uint64_t seed);
CheckResult check_log_approx_lemma(std::uint64_t seed);
CheckResult check_reduction_optimality();
CheckResult check_interres_bounds();

struct ScalingConfig {
  std::vector<int> sizes = {1000};
  std::vector<int> budgets = {10, 100, 1000};
  double eps = 0.1;
};
// Informational: nstm wall time spread across budgets against exact greedy
// growth.
CheckResult check_scaling_trend(std::uint64_t seed, const ScalingConfig& config = {});

enum class Suite { kFormulas, kLemmas, kApprox, kSchur, kResistance };

std::optional<Suite> parse_suite(std::string_view name);
std::vector<CheckResult> run_suite(Suite suite, std::uint64_t seed);

// Every gating check plus the scaling report, in id order.
std::vector<CheckResult> run_all(std::uint64_t seed, bool include_scaling = true);

bool all_passed(const std::vector<CheckResult>& results);
std::string format_line(const CheckResult& result);
std::string format_table(const std::vector<CheckResult>& results);

}  // namespace spantree

#endif  // SPANTREE_VERIFY_HPP_
