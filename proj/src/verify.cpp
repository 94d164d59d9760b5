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

#include "spantree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "spantree/commands.hpp"
#include "spantree/error.hpp"
#include "spantree/instances.hpp"
#include "spantree/maximizer.hpp"
#include "spantree/oracle.hpp"
#include "spantree/parallel.hpp"
#include "spantree/random.hpp"
#include "spantree/resistance.hpp"
#include "spantree/schur.hpp"
#include "spantree/spectral.hpp"

namespace spantree {
namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return buf;
}

// Times `body`, which fills passed/detail, and applies the time limit.
CheckResult timed(int id, std::string name, double limit,
                  const std::function<void(CheckResult&)>& body) {
  CheckResult result;
  result.id = id;
  result.name = std::move(name);
  result.time_limit = limit;
  const auto start = Clock::now();
  try {
    body(result);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0.0 && result.seconds > limit && !result.informational) {
    result.passed = false;
    result.detail += fmt(" [over time limit %.0f s]", limit);
  }
  return result;
}

std::uint64_t trial_seed(std::uint64_t seed, int check, int trial) {
  return derive_seed(seed, streams::kVerify,
                     static_cast<std::uint64_t>(check) * 1'000'003ULL +
                         static_cast<std::uint64_t>(trial));
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Even-index Fibonacci numbers F_{2n}, independent of the fan recurrence.
BigInt fibonacci(int index) {
  BigInt a = 0;
  BigInt b = 1;
  for (int i = 0; i < index; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// Runs `trials` independent trials on the worker pool; results come back
// ordered by trial index.
template <typename T>
std::vector<T> run_trials(int trials, const std::function<T(int)>& trial) {
  std::vector<T> out(trials);
  parallel_for(static_cast<std::size_t>(trials),
               [&](std::size_t i) { out[i] = trial(static_cast<int>(i)); });
  return out;
}

}  // namespace

CheckResult check_fan_counts() {
  return timed(1, "fan closed form", 1.0, [](CheckResult& r) {
    int bad = 0;
    for (int n = 1; n <= 12; ++n) {
      const ExactCount count = tree_count_exact(gen_fan(n));
      if (!count.is_integer() || count.integer() != fan_count(n).integer() ||
          count.integer() != fibonacci(2 * n)) {
        ++bad;
      }
    }
    const bool anchors = tree_count_exact(gen_fan(2)).integer() == 3 &&
                         tree_count_exact(gen_fan(3)).integer() == 8 &&
                         tree_count_exact(gen_fan(5)).integer() == 55;
    r.passed = bad == 0 && anchors;
    r.detail = fmt("n=1..12 mismatches=%d, T(F_2)=3 T(F_3)=8 T(F_5)=55 %s", bad,
                   anchors ? "ok" : "FAILED");
  });
}

CheckResult check_wheel_inequality() {
  return timed(2, "wheel below sqrt(5) fan", 1.0, [](CheckResult& r) {
    int bad = 0;
    for (int n = 3; n <= 12; ++n) {
      const BigInt wheel = tree_count_exact(gen_wheel(n)).integer();
      const BigInt fan = tree_count_exact(gen_fan(n)).integer();
      // T(W) < sqrt(5) T(F)  <=>  T(W)^2 < 5 T(F)^2 for positive counts.
      if (!(wheel * wheel < 5 * fan * fan)) ++bad;
    }
    r.passed = bad == 0;
    r.detail = fmt("n=3..12 violations=%d", bad);
  });
}

CheckResult check_determinant_lemma(std::uint64_t seed) {
  return timed(3, "determinant lemma ledger", 10.0, [seed](CheckResult& r) {
    constexpr int kTrials = 200;
    const auto errors = run_trials<double>(kTrials, [seed](int t) {
      Rng rng(trial_seed(seed, 3, t));
      RandomInstanceParams p;
      p.n = uniform_int(rng, 2, 12);
      p.m_extra = uniform_int(rng, 0, 2 * p.n);
      p.q = 1;
      p.weight_lo = 1.0;
      p.weight_hi = 4.0;
      p.seed = rng();
      const InstanceSpec spec = gen_random(p);
      const Edge& e = spec.candidates[0];
      const double ledger =
          det_lemma_update(log_tree_count(spec.base), e.weight, er_exact(spec.base, e.u, e.v));
      const double recount = tree_count_exact(spec.base.with_edge(e)).log2();
      return std::abs(ledger - recount) / std::max(1.0, std::abs(recount));
    });
    const double worst = *std::max_element(errors.begin(), errors.end());
    r.passed = worst <= 1e-7;
    r.detail = fmt("%d graphs, worst relative error %.3g (limit 1e-7)", kTrials, worst);
  });
}

CheckResult check_resistance_monotonicity(std::uint64_t seed) {
  return timed(4, "Rayleigh monotonicity and Schur preservation", 30.0, [seed](CheckResult& r) {
    constexpr int kTrials = 100;
    constexpr double kSlack = 1e-8;
    struct Outcome {
      int pairs = 0;
      int rayleigh = 0;
      int schur = 0;
    };
    const auto outcomes = run_trials<Outcome>(kTrials, [seed](int t) {
      Rng rng(trial_seed(seed, 4, t));
      RandomInstanceParams p;
      p.n = uniform_int(rng, 3, 24);
      p.m_extra = uniform_int(rng, 0, 2 * p.n);
      p.q = 1;
      p.weight_lo = 0.5;
      p.weight_hi = 4.0;
      p.integer_weights = false;
      p.seed = rng();
      const InstanceSpec spec = gen_random(p);
      const int n = p.n;
      ResistanceTracker before(spec.base);
      ResistanceTracker after = before;
      after.add_edge(spec.candidates[0]);

      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      order.resize(uniform_int(rng, 2, n));
      const TerminalSet terminals(order, n);
      ResistanceTracker reduced(schur_exact(spec.base, terminals));

      Outcome o;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          ++o.pairs;
          const double er = before.resistance(u, v);
          if (after.resistance(u, v) > er + kSlack * std::max(1.0, er)) ++o.rayleigh;
          const int lu = terminals.local_index(u);
          const int lv = terminals.local_index(v);
          if (lu >= 0 && lv >= 0 &&
              std::abs(reduced.resistance(lu, lv) - er) > kSlack * std::max(1.0, er)) {
            ++o.schur;
          }
        }
      }
      return o;
    });
    Outcome total;
    for (const Outcome& o : outcomes) {
      total.pairs += o.pairs;
      total.rayleigh += o.rayleigh;
      total.schur += o.schur;
    }
    r.passed = total.rayleigh == 0 && total.schur == 0;
    r.detail = fmt("%d graphs, %d pairs, monotonicity violations=%d, Schur mismatches=%d",
                   kTrials, total.pairs, total.rayleigh, total.schur);
  });
}

CheckResult check_approx_schur(std::uint64_t seed) {
  return timed(5, "approximate Schur complement contract", 120.0, [seed](CheckResult& r) {
    constexpr int kGraphs = 50;
    constexpr double kDelta = 0.01;
    const double eps_values[] = {0.1, 0.25};
    struct Outcome {
      int failures = 0;
      double worst = 0.0;  // largest |lambda - 1| / eps
    };
    const auto outcomes = run_trials<Outcome>(kGraphs, [&](int t) {
      Rng rng(trial_seed(seed, 5, t));
      RandomInstanceParams p;
      p.n = uniform_int(rng, 20, 200);
      p.m_extra = uniform_int(rng, p.n / 2, 3 * p.n);
      p.q = 1;
      p.weight_lo = 1.0;
      p.weight_hi = 4.0;
      p.integer_weights = false;
      p.seed = rng();
      const InstanceSpec spec = gen_random(p);
      std::vector<Vertex> order(p.n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      order.resize(uniform_int(rng, 2, 20));
      const TerminalSet terminals(order, p.n);
      const Graph exact = schur_exact(spec.base, terminals);
      Outcome o;
      for (double eps : eps_values) {
        const Graph approx = approx_schur(spec.base, terminals, eps, kDelta, rng());
        const SpectralRatio ratio = spectral_ratio(approx, exact);
        if (ratio.lambda_min < 1.0 - eps || ratio.lambda_max > 1.0 + eps) ++o.failures;
        o.worst = std::max({o.worst, (1.0 - ratio.lambda_min) / eps,
                            (ratio.lambda_max - 1.0) / eps});
      }
      return o;
    });
    int failures = 0;
    double worst = 0.0;
    for (const Outcome& o : outcomes) {
      failures += o.failures;
      worst = std::max(worst, o.worst);
    }
    r.passed = failures <= 1;
    r.detail = fmt("%d trials, contract failures=%d (allowed 1), worst deviation %.2f eps",
                   kGraphs * 2, failures, worst);
  });
}

CheckResult check_resistance_sketch(std::uint64_t seed) {
  return timed(6, "resistance sketch contract", 120.0, [seed](CheckResult& r) {
    constexpr int kGraphs = 50;
    constexpr int kPairs = 100;
    constexpr double kEps = 0.1;
    struct Outcome {
      int within = 0;
      int loose = 0;
      double worst = 0.0;
    };
    // Trials run one after another; each sketch already fans its probes out
    // over the worker pool.
    std::vector<Outcome> outcomes;
    for (int t = 0; t < kGraphs; ++t) {
      Rng rng(trial_seed(seed, 6, t));
      RandomInstanceParams p;
      p.n = uniform_int(rng, 50, 500);
      p.m_extra = uniform_int(rng, p.n / 2, 2 * p.n);
      p.q = 1;
      p.weight_lo = 1.0;
      p.weight_hi = 4.0;
      p.integer_weights = false;
      p.seed = rng();
      const InstanceSpec spec = gen_random(p);
      std::vector<VertexPair> pairs;
      for (int i = 0; i < kPairs; ++i) {
        const int u = uniform_int(rng, 0, p.n - 1);
        int v = uniform_int(rng, 0, p.n - 1);
        while (v == u) v = uniform_int(rng, 0, p.n - 1);
        pairs.emplace_back(u, v);
      }
      // The sketch itself, even where er_est would project exactly.
      const std::vector<double> estimates = sketch_resistances(
          spec.base, pairs, sketch_width(p.n, kEps), rng());
      const LaplacianFactor factor(spec.base);
      Outcome o;
      for (int i = 0; i < kPairs; ++i) {
        const double exact = er_exact(factor, pairs[i].first, pairs[i].second);
        const double rel = std::abs(estimates[i] / exact - 1.0);
        if (rel <= kEps) ++o.within;
        if (rel <= 1.5 * kEps) ++o.loose;
        o.worst = std::max(o.worst, rel);
      }
      outcomes.push_back(o);
    }
    Outcome total;
    for (const Outcome& o : outcomes) {
      total.within += o.within;
      total.loose += o.loose;
      total.worst = std::max(total.worst, o.worst);
    }
    const int count = kGraphs * kPairs;
    r.passed = total.within * 100 >= 99 * count && total.loose == count;
    r.detail = fmt("%d estimates, within 10%%: %.2f%% (need 99%%), within 15%%: %.2f%% "
                   "(need 100%%), worst %.3f",
                   count, 100.0 * total.within / count, 100.0 * total.loose / count,
                   total.worst);
  });
}

CheckResult check_add_above_certificate(std::uint64_t seed) {
  return timed(7, "sequential addition certificate", 120.0, [seed](CheckResult& r) {
    constexpr int kInstances = 100;
    constexpr double kEps = 0.1;
    struct Outcome {
      int processed = 0;
      int added = 0;
      int violations = 0;
    };
    const auto outcomes = run_trials<Outcome>(kInstances, [seed](int t) {
      Rng rng(trial_seed(seed, 7, t));
      RandomInstanceParams p;
      p.n = uniform_int(rng, 6, 40);
      p.m_extra = uniform_int(rng, 0, p.n);
      p.q = uniform_int(rng, 2, 32);
      p.weight_lo = 1.0;
      p.weight_hi = 4.0;
      p.seed = rng();
      const InstanceSpec spec = gen_random(p);
      const int k = uniform_int(rng, 1, p.q);

      // Threshold at a random initial score so both branches occur.
      ResistanceTracker replay(spec.base);
      std::vector<double> scores;
      for (const Edge& e : spec.candidates.pairs()) {
        scores.push_back(e.weight * replay.resistance(e.u, e.v));
      }
      std::sort(scores.begin(), scores.end());
      const double th = scores[uniform_int(rng, 0, p.q - 1)];

      std::vector<AddAboveEvent> events;
      SolverOptions options;
      options.seed = rng();
      options.observer = [&events](const AddAboveEvent& e) { events.push_back(e); };
      add_above(spec.base, spec.candidates, th, kEps, k, options);

      Outcome o;
      for (const AddAboveEvent& event : events) {
        ++o.processed;
        const Edge& e = spec.candidates[event.candidate];
        const double score = e.weight * replay.resistance(e.u, e.v);
        if (event.added) {
          ++o.added;
          if (score < th / (1.0 + 2.0 * kEps)) ++o.violations;
          replay.add_edge(e);
        } else if (event.budget_before > 0 && score > th / (1.0 - 2.0 * kEps)) {
          ++o.violations;
        }
      }
      return o;
    });
    Outcome total;
    for (const Outcome& o : outcomes) {
      total.processed += o.processed;
      total.added += o.added;
      total.violations += o.violations;
    }
    r.passed = total.violations == 0;
    r.detail = fmt("%d instances, %d decisions (%d added), violations=%d", kInstances,
                   total.processed, total.added, total.violations);
  });
}

CheckResult check_end_to_end(std::uint64_t seed) {
  return timed(8, "end-to-end approximation ratio", 300.0, [seed](CheckResult& r) {
    constexpr int kInstances = 200;
    constexpr double kEps = 0.1;
    const double greedy_factor = 1.0 - 1.0 / std::exp(1.0);
    const double nstm_factor = greedy_factor - kEps;
    struct Outcome {
      bool nstm_ok = true;
      bool greedy_ok = true;
      double nstm_ratio = 1.0;
      double greedy_ratio = 1.0;
    };
    const auto outcomes = run_trials<Outcome>(kInstances, [&](int t) {
      Rng rng(trial_seed(seed, 8, t));
      RandomInstanceParams p;
      p.n = uniform_int(rng, 3, 10);
      p.m_extra = uniform_int(rng, 0, p.n);
      p.q = uniform_int(rng, 1, 12);
      p.k = uniform_int(rng, 1, std::min(4, p.q));
      p.weight_lo = 1.0;
      p.weight_hi = 4.0;
      p.seed = rng();
      const InstanceSpec spec = gen_random(p);
      SolverOptions options;
      options.seed = rng();
      const Selection nstm = nstm_maximize(spec.base, spec.candidates, kEps, spec.k, options);
      const Selection greedy = greedy_exact(spec.base, spec.candidates, spec.k);
      const BruteForceResult best = brute_force_opt(spec.base, spec.candidates, spec.k);
      Outcome o;
      o.nstm_ratio = nstm.total_log_gain / best.log_gain;
      o.greedy_ratio = greedy.total_log_gain / best.log_gain;
      o.nstm_ok = nstm.total_log_gain >= nstm_factor * best.log_gain;
      o.greedy_ok = greedy.total_log_gain >= greedy_factor * best.log_gain;
      return o;
    });
    int nstm_bad = 0;
    int greedy_bad = 0;
    double nstm_min = 1.0;
    double greedy_min = 1.0;
    for (const Outcome& o : outcomes) {
      nstm_bad += !o.nstm_ok;
      greedy_bad += !o.greedy_ok;
      nstm_min = std::min(nstm_min, o.nstm_ratio);
      greedy_min = std::min(greedy_min, o.greedy_ratio);
    }
    r.passed = nstm_bad == 0 && greedy_bad == 0;
    r.detail = fmt("%d instances, nstm worst ratio %.4f (need %.4f, failures %d), greedy "
                   "worst ratio %.4f (need %.4f, failures %d)",
                   kInstances, nstm_min, nstm_factor, nstm_bad, greedy_min, greedy_factor,
                   greedy_bad);
  });
}

CheckResult check_log_approx_lemma(std::uint64_t seed) {
  return timed(9, "log-approximation sandwich", 1.0, [seed](CheckResult& r) {
    constexpr int kTrials = 10'000;
    Rng rng(trial_seed(seed, 9, 0));
    std::uniform_real_distribution<double> draw_a(0.0, 1000.0);
    std::uniform_real_distribution<double> draw_eps(0.0, 0.5);
    int bad = 0;
    for (int t = 0; t < kTrials; ++t) {
      const double a = draw_a(rng);
      // Map [0, 0.5) onto (0, 0.5].
      const double eps = 0.5 - draw_eps(rng);
      const double b = std::uniform_real_distribution<double>((1.0 - eps) * a, (1.0 + eps) * a)(rng);
      if (!check_log_approx(a, b, eps)) ++bad;
    }
    r.passed = bad == 0;
    r.detail = fmt("%d trials, violations=%d", kTrials, bad);
  });
}

CheckResult check_reduction_optimality() {
  return timed(10, "reduction optimum and path-cover gap", 60.0, [](CheckResult& r) {
    int bad = 0;
    Rng rng(derive_seed(0, streams::kVerify, 10));
    for (int n = 4; n <= 9; ++n) {
      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<VertexPair> path;
      for (int i = 0; i + 1 < n; ++i) path.emplace_back(order[i], order[i + 1]);
      const InstanceSpec spec = gen_star_plus(n, path);
      const BruteForceResult best = brute_force_opt(spec.base, spec.candidates, n - 1);
      if (best.best_count != fan_count(n).value) ++bad;
    }
    // Three disjoint triangles: path cover number 3 = n / 3.
    const std::vector<Edge> triangles = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1},
                                         {3, 5, 1}, {6, 7, 1}, {7, 8, 1}, {6, 8, 1}};
    const SoundnessReport gap = soundness_gap(9, triangles);
    const bool gap_ok = gap.path_cover_number >= 3 && gap.optimum_log2 < gap.fan_log2;
    r.passed = bad == 0 && gap_ok;
    r.detail = fmt("Hamiltonian optimum mismatches n=4..9: %d; n=9 cover=%zu log2 opt %.4f "
                   "< log2 T(F_9) %.4f, ratio %.4f",
                   bad, gap.path_cover_number, gap.optimum_log2, gap.fan_log2, gap.ratio);
  });
}

CheckResult check_interres_bounds() {
  return timed(11, "resistance bounds on path covers", 5.0, [](CheckResult& r) {
    const InterResCase kinds[] = {InterResCase::kInteriorToPath,
                                  InterResCase::kInteriorToIsolated,
                                  InterResCase::kSamePathEnds};
    int bad = 0;
    double worst[3] = {0.0, 0.0, 0.0};
    for (int c = 0; c < 3; ++c) {
      for (int n : {6, 8, 10}) {
        const InterResConfig config = make_interres_config(kinds[c], n);
        worst[c] = std::max(worst[c], interres_resistance(config));
        if (!spantree::check_interres_bounds(config)) ++bad;
      }
    }
    r.passed = bad == 0;
    r.detail = fmt("violations=%d; max er %.4f <= %.4f, %.4f <= %.4f, %.4f < %.4f", bad,
                   worst[0], interres_bound(kinds[0]), worst[1], interres_bound(kinds[1]),
                   worst[2], interres_bound(kinds[2]));
  });
}

CheckResult check_scaling_trend(std::uint64_t seed, const ScalingConfig& config) {
  return timed(12, "scaling trend (informational)", 0.0, [&](CheckResult& r) {
    r.informational = true;
    BenchConfig bench_config;
    bench_config.sizes = config.sizes;
    bench_config.budgets = config.budgets;
    bench_config.eps = config.eps;
    bench_config.seed = seed;
    const std::vector<BenchRow> rows = bench(bench_config);
    std::ostringstream detail;
    bool trend = true;
    for (int n : config.sizes) {
      double nstm_lo = 1e300, nstm_hi = 0.0;
      double exact_first = 0.0, exact_last = 0.0;
      int k_first = 0, k_last = 0;
      for (const BenchRow& row : rows) {
        if (row.n != n) continue;
        if (row.algorithm == "nstm") {
          nstm_lo = std::min(nstm_lo, row.wall_time_seconds);
          nstm_hi = std::max(nstm_hi, row.wall_time_seconds);
        } else {
          if (k_first == 0) {
            k_first = row.k;
            exact_first = row.wall_time_seconds;
          }
          k_last = row.k;
          exact_last = row.wall_time_seconds;
        }
      }
      const double nstm_spread = nstm_hi / nstm_lo;
      const double exact_growth = exact_last / exact_first;
      trend = trend && nstm_spread < 2.0 && exact_growth >= 0.5 * k_last / k_first;
      detail << fmt("n=%d: nstm %.2f-%.2f s (spread %.2fx); exact %.2f s at k=%d, %.2f s at "
                    "k=%d (growth %.1fx); ",
                    n, nstm_lo, nstm_hi, nstm_spread, exact_first, k_first, exact_last, k_last,
                    exact_growth);
    }
    r.passed = trend;
    r.detail = detail.str() + (trend ? "trend as expected" : "trend not observed");
  });
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "formulas") return Suite::kFormulas;
  if (name == "lemmas") return Suite::kLemmas;
  if (name == "approx") return Suite::kApprox;
  if (name == "schur") return Suite::kSchur;
  if (name == "resistance") return Suite::kResistance;
  return std::nullopt;
}

std::vector<CheckResult> run_suite(Suite suite, std::uint64_t seed) {
  switch (suite) {
    case Suite::kFormulas:
      return {check_fan_counts(), check_wheel_inequality(), check_determinant_lemma(seed)};
    case Suite::kLemmas:
      return {check_log_approx_lemma(seed), check_reduction_optimality(),
              check_interres_bounds()};
    case Suite::kApprox:
      return {check_add_above_certificate(seed), check_end_to_end(seed)};
    case Suite::kSchur:
      return {check_approx_schur(seed)};
    case Suite::kResistance:
      return {check_resistance_monotonicity(seed), check_resistance_sketch(seed)};
  }
  return {};
}

std::vector<CheckResult> run_all(std::uint64_t seed, bool include_scaling) {
  std::vector<CheckResult> out = {
      check_fan_counts(),
      check_wheel_inequality(),
      check_determinant_lemma(seed),
      check_resistance_monotonicity(seed),
      check_approx_schur(seed),
      check_resistance_sketch(seed),
      check_add_above_certificate(seed),
      check_end_to_end(seed),
      check_log_approx_lemma(seed),
      check_reduction_optimality(),
      check_interres_bounds(),
  };
  if (include_scaling) out.push_back(check_scaling_trend(seed));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed || r.informational; });
}

std::string format_line(const CheckResult& r) {
  const char* status = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
  std::string limit = r.time_limit > 0.0 ? fmt(" / %.0f s", r.time_limit) : std::string();
  return fmt("[%s] %2d %-46s %8.3f s%s  ", status, r.id, r.name.c_str(), r.seconds,
             limit.c_str()) +
         r.detail;
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::string out;
  for (const CheckResult& r : results) out += format_line(r) + "\n";
  int failed = 0;
  for (const CheckResult& r : results) failed += !(r.passed || r.informational);
  out += fmt("%zu checks, %d failed\n", results.size(), failed);
  return out;
}

}  // namespace spantree
