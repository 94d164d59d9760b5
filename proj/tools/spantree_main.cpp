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

// Command-line driver: solve, verify, bench and gen.
//
// Exit status: 0 success, 1 verification failure or internal error,
// 2 usage, parse or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spantree/commands.hpp"
#include "spantree/error.hpp"
#include "spantree/instance_io.hpp"
#include "spantree/instances.hpp"
#include "spantree/random.hpp"
#include "spantree/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : spantree::Error {
  using Error::Error;
};

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw spantree::Error("cannot write '" + out_path + "'");
    out << text;
  }
}

struct SolveArgs {
  std::string instance;
  std::string algo = "nstm";
  std::optional<double> eps;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  bool oracle = false;
  std::string out;
  std::string format = "json";
};

int run_solve(const SolveArgs& args) {
  const auto algorithm = spantree::parse_algorithm(args.algo);
  if (!algorithm) throw UsageError("unknown algorithm '" + args.algo + "'");
  if (args.k && *args.k < 1) throw UsageError("--k must be at least 1");
  const spantree::ParsedInstance parsed = spantree::read_instance(args.instance);
  spantree::InstanceSpec spec = parsed.spec;
  if (spec.label.empty()) spec.label = args.instance;

  spantree::SolveRequest request;
  request.algorithm = *algorithm;
  request.eps = args.eps.value_or(spec.eps);
  request.k = args.k.value_or(spec.k);
  request.seed = args.seed.value_or(spec.seed);
  request.oracle = args.oracle;
  if (!(request.eps > 0.0 && request.eps <= 0.5)) {
    throw UsageError("--eps must lie in (0, 0.5]");
  }
  if (!spantree::is_connected(spec.base)) {
    throw UsageError("base graph of '" + args.instance + "' is not connected");
  }
  const spantree::RunReport report = spantree::solve(spec, request);
  for (const auto& warning : report.warnings) std::cerr << "warning: " << warning << "\n";
  if (args.format == "csv") {
    emit(spantree::report_csv_header() + "\n" + spantree::report_csv_row(report) + "\n",
         args.out);
  } else {
    emit(spantree::to_json(report).dump(2) + "\n", args.out);
  }
  return kExitOk;
}

int run_verify(const std::string& suite_name, std::uint64_t seed, bool scaling) {
  std::vector<spantree::CheckResult> results;
  if (suite_name == "all") {
    results = spantree::run_all(seed, scaling);
  } else {
    const auto suite = spantree::parse_suite(suite_name);
    if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
    results = spantree::run_suite(*suite, seed);
  }
  std::cout << spantree::format_table(results);
  return spantree::all_passed(results) ? kExitOk : kExitFailure;
}

struct BenchArgs {
  std::vector<int> sizes;
  std::vector<int> budgets = {10};
  std::vector<std::string> algos = {"nstm", "exact"};
  double eps = 0.1;
  int reps = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int run_bench(const BenchArgs& args) {
  if (args.sizes.empty()) throw UsageError("bench needs at least one size");
  spantree::BenchConfig config;
  config.sizes = args.sizes;
  config.budgets = args.budgets;
  config.eps = args.eps;
  config.repetitions = args.reps;
  config.seed = args.seed;
  config.algorithms.clear();
  for (const auto& name : args.algos) {
    const auto algorithm = spantree::parse_algorithm(name);
    if (!algorithm) throw UsageError("unknown algorithm '" + name + "'");
    config.algorithms.push_back(*algorithm);
  }
  try {
    emit(spantree::bench_csv(spantree::bench(config)), args.out);
  } catch (const spantree::DomainError& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

struct GenArgs {
  std::string family;
  int n = 8;
  int m_extra = 0;
  int q = 8;
  int k = 1;
  double weight_lo = 1.0;
  double weight_hi = 1.0;
  bool real_weights = false;
  double eps = 0.1;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  spantree::InstanceSpec spec;
  if (args.family == "random") {
    spantree::RandomInstanceParams p;
    p.n = args.n;
    p.m_extra = args.m_extra;
    p.q = args.q;
    p.k = args.k;
    p.weight_lo = args.weight_lo;
    p.weight_hi = args.weight_hi;
    p.integer_weights = !args.real_weights;
    p.seed = args.seed;
    spec = spantree::gen_random(p);
  } else if (args.family == "fan-reduction") {
    // Star plus a Hamiltonian path on the leaves in a seeded order.
    std::vector<spantree::Vertex> order(args.n);
    std::iota(order.begin(), order.end(), 0);
    spantree::Rng rng(spantree::derive_seed(args.seed, spantree::streams::kInstances));
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<spantree::VertexPair> path;
    for (int i = 0; i + 1 < args.n; ++i) path.emplace_back(order[i], order[i + 1]);
    spec = spantree::gen_star_plus(args.n, path);
    spec.label = "fan-reduction";
  } else {
    throw UsageError("unknown family '" + args.family + "' (random, fan-reduction)");
  }
  spec.eps = args.eps;
  spec.seed = args.seed;
  if (spec.k_clamped) std::cerr << "warning: k clamped to q = " << spec.k << "\n";
  emit(spantree::serialize_instance(spec), args.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning tree count maximization by edge augmentation"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Run a solver on an instance file");
  solve->add_option("--instance", solve_args.instance, "Instance file")->required();
  solve->add_option("--algo", solve_args.algo, "exact, greedy-th or nstm")
      ->capture_default_str();
  solve->add_option("--eps", solve_args.eps, "Accuracy parameter (default: instance)");
  solve->add_option("--k", solve_args.k, "Edge budget (default: instance)");
  solve->add_option("--seed", solve_args.seed, "Random seed (default: instance)");
  solve->add_flag("--oracle", solve_args.oracle, "Compare against the brute-force optimum");
  solve->add_option("--out", solve_args.out, "Also write the report to this file");
  solve->add_option("--format", solve_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string suite = "all";
  std::uint64_t verify_seed = 0;
  bool scaling = false;
  auto* verify = app.add_subcommand("verify", "Run property suites against exact oracles");
  verify->add_option("suite", suite, "formulas, lemmas, approx, schur, resistance or all")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Seed for randomized checks")->capture_default_str();
  verify->add_flag("--scaling", scaling, "Include the scaling trend report in 'all'");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time solvers on random instances, CSV output");
  bench->add_option("--sizes", bench_args.sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--budgets", bench_args.budgets, "Edge budgets k")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--algos", bench_args.algos, "Algorithms")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--eps", bench_args.eps)->capture_default_str();
  bench->add_option("--reps", bench_args.reps)->capture_default_str();
  bench->add_option("--seed", bench_args.seed)->capture_default_str();
  bench->add_option("--out", bench_args.out, "Also write the CSV to this file");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a generated instance file");
  gen->add_option("family", gen_args.family, "random or fan-reduction")->required();
  gen->add_option("--n", gen_args.n)->capture_default_str();
  gen->add_option("--m-extra", gen_args.m_extra)->capture_default_str();
  gen->add_option("--q", gen_args.q)->capture_default_str();
  gen->add_option("--k", gen_args.k)->capture_default_str();
  gen->add_option("--weight-lo", gen_args.weight_lo)->capture_default_str();
  gen->add_option("--weight-hi", gen_args.weight_hi)->capture_default_str();
  gen->add_flag("--real-weights", gen_args.real_weights);
  gen->add_option("--eps", gen_args.eps)->capture_default_str();
  gen->add_option("--seed", gen_args.seed)->capture_default_str();
  gen->add_option("--out", gen_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*verify) return run_verify(suite, verify_seed, scaling);
    if (*bench) return run_bench(bench_args);
    if (*gen) return run_gen(gen_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const spantree::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const spantree::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const spantree::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
