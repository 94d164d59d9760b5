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

#include "spantree/commands.hpp"

#include <chrono>
#include <sstream>

#include "spantree/error.hpp"
#include "spantree/instance_io.hpp"
#include "spantree/oracle.hpp"
#include "spantree/random.hpp"
#include "spantree/spectral.hpp"

namespace spantree {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Selection run_algorithm(Algorithm algorithm, const InstanceSpec& spec, double eps, int k,
                        std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kExact:
      return greedy_exact(spec.base, spec.candidates, k);
    case Algorithm::kGreedyTh:
      return greedy_th(spec.base, spec.candidates, eps, k);
    case Algorithm::kNstm: {
      SolverOptions options;
      options.seed = seed;
      return nstm_maximize(spec.base, spec.candidates, eps, k, options);
    }
  }
  throw DomainError("unknown algorithm");
}

}  // namespace

RunReport solve(const InstanceSpec& spec, const SolveRequest& request) {
  if (request.k < 1) throw DomainError("k must be at least 1");
  if (spec.candidates.empty()) throw DomainError("instance has no candidates");
  if (!is_connected(spec.base)) throw SingularMinorError("base graph is not connected");

  RunReport report;
  report.instance = spec.label;
  report.n = spec.base.num_vertices();
  report.m = spec.base.num_edges();
  report.q = spec.candidates.size();
  report.algorithm = std::string(algorithm_name(request.algorithm));
  report.eps = request.eps;
  report.seed = request.seed;
  report.k = request.k;
  if (spec.k_clamped) report.warnings.push_back("instance budget was clamped to q");
  if (report.k > static_cast<int>(report.q)) {
    report.warnings.push_back("k = " + std::to_string(report.k) + " clamped to q = " +
                              std::to_string(report.q));
    report.k = static_cast<int>(report.q);
  }
  report.base_log2_trees = log_tree_count(spec.base);

  const auto start = Clock::now();
  report.selection = run_algorithm(request.algorithm, spec, request.eps, report.k, request.seed);
  report.wall_time_seconds = seconds_since(start);

  if (request.oracle) {
    OracleComparison cmp;
    const std::size_t subsets = subsets_up_to(report.q, static_cast<std::size_t>(report.k));
    if (subsets > kBruteForceSubsetLimit) {
      cmp.note = "oracle skipped: " + std::to_string(subsets) + " subsets exceed the limit of " +
                 std::to_string(kBruteForceSubsetLimit);
    } else {
      const BruteForceResult best = brute_force_opt(spec.base, spec.candidates, report.k);
      cmp.ran = true;
      cmp.optimum = best.subset;
      cmp.optimum_log_gain = best.log_gain;
      cmp.ratio = best.log_gain > 0.0 ? report.selection.total_log_gain / best.log_gain : 1.0;
    }
    report.oracle = std::move(cmp);
  }
  return report;
}

std::vector<BenchRow> bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw DomainError("bench: empty size list");
  if (config.budgets.empty()) throw DomainError("bench: empty budget list");
  if (config.repetitions < 1) throw DomainError("bench: repetitions must be at least 1");
  for (int n : config.sizes) {
    if (n < 2 || n > kBenchMaxVertices) {
      throw DomainError("bench: size " + std::to_string(n) + " outside [2, " +
                        std::to_string(kBenchMaxVertices) + "]");
    }
  }
  for (int k : config.budgets) {
    if (k < 1) throw DomainError("bench: budgets must be at least 1");
  }
  std::vector<BenchRow> rows;
  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    const int n = config.sizes[s];
    for (int rep = 0; rep < config.repetitions; ++rep) {
      RandomInstanceParams params;
      params.n = n;
      params.m_extra = n;
      params.q = n;
      params.k = 1;
      params.seed = derive_seed(config.seed, static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(rep));
      const InstanceSpec spec = gen_random(params);
      for (int k : config.budgets) {
        const int budget = std::min(k, n);
        for (Algorithm algorithm : config.algorithms) {
          const auto start = Clock::now();
          const Selection sel = run_algorithm(algorithm, spec, config.eps, budget, params.seed);
          BenchRow row;
          row.wall_time_seconds = seconds_since(start);
          row.n = n;
          row.m = spec.base.num_edges();
          row.q = spec.candidates.size();
          row.k = budget;
          row.algorithm = std::string(algorithm_name(algorithm));
          row.repetition = rep;
          row.log_gain = sel.total_log_gain;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,m,q,k,algorithm,repetition,wall_time_seconds,log_gain\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.m << ',' << r.q << ',' << r.k << ',' << r.algorithm << ','
        << r.repetition << ',' << format_real(r.wall_time_seconds) << ','
        << format_real(r.log_gain) << '\n';
  }
  return out.str();
}

}  // namespace spantree
