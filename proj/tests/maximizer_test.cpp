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

#include "spantree/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "reference.hpp"
#include "spantree/error.hpp"
#include "spantree/instances.hpp"
#include "spantree/resistance.hpp"
#include "spantree/spectral.hpp"

namespace spantree {
namespace {

const double kGreedyFactor = 1.0 - 1.0 / std::exp(1.0);

InstanceSpec star_with_triangle() {
  const VertexPair triangle[] = {{0, 1}, {1, 2}, {0, 2}};
  return gen_star_plus(3, triangle);
}

InstanceSpec random_instance(std::uint64_t seed, int n, int q, bool integer_weights = true) {
  RandomInstanceParams p;
  p.n = n;
  p.m_extra = n / 3;
  p.q = q;
  p.k = 1;
  p.weight_lo = 1;
  p.weight_hi = 4;
  p.integer_weights = integer_weights;
  p.seed = seed;
  return gen_random(p);
}

void expect_well_formed(const Selection& s, std::size_t q, int k) {
  EXPECT_LE(s.chosen.size(), static_cast<std::size_t>(k));
  EXPECT_EQ(s.budget_used, static_cast<int>(s.chosen.size()));
  EXPECT_EQ(s.per_step_log_gain.size(), s.chosen.size());
  std::set<int> seen;
  double sum = 0.0;
  for (std::size_t i = 0; i < s.chosen.size(); ++i) {
    EXPECT_GE(s.chosen[i], 0);
    EXPECT_LT(s.chosen[i], static_cast<int>(q));
    EXPECT_TRUE(seen.insert(s.chosen[i]).second) << "repeated index " << s.chosen[i];
    sum += s.per_step_log_gain[i];
  }
  EXPECT_NEAR(s.total_log_gain, sum, 1e-9);
}

// Replays chosen edges through the determinant lemma with exact resistances.
double replayed_gain(const Graph& g, const CandidateSet& q, const Selection& s) {
  Graph current = g;
  double log_t = log_tree_count(g);
  const double start = log_t;
  for (int index : s.chosen) {
    const Edge& e = q[index];
    log_t = det_lemma_update(log_t, e.weight, er_exact(current, e.u, e.v));
    current = current.with_edge(e);
  }
  return log_t - start;
}

TEST(GreedyExactTest, StarWithTriangle) {
  const InstanceSpec spec = star_with_triangle();
  const Selection s = greedy_exact(spec.base, spec.candidates, 2);
  EXPECT_EQ(s.chosen.size(), 2u);
  EXPECT_NEAR(s.total_log_gain, 3.0, 1e-9);
  EXPECT_EQ(s.chosen[0], 0);
}

TEST(GreedyExactTest, SingleCandidate) {
  const CandidateSet q({{0, 2, 1.0}});
  const Selection s = greedy_exact(gen_path(3), q, 1);
  EXPECT_EQ(s.chosen, std::vector<int>{0});
  EXPECT_NEAR(s.total_log_gain, std::log2(3.0), 1e-12);
}

TEST(GreedyExactTest, BudgetAboveSupplyTakesEverything) {
  const InstanceSpec spec = random_instance(4, 12, 6);
  const Selection s = greedy_exact(spec.base, spec.candidates, 10);
  EXPECT_EQ(s.chosen.size(), 6u);
  // Marginal-gain order: the exact gains are non-increasing (submodularity).
  for (std::size_t i = 1; i < s.per_step_log_gain.size(); ++i) {
    EXPECT_LE(s.per_step_log_gain[i], s.per_step_log_gain[i - 1] + 1e-12);
  }
  const Graph all = spec.base.with_edges(spec.candidates.pairs());
  EXPECT_NEAR(s.total_log_gain, log_tree_count(all) - log_tree_count(spec.base), 1e-9);
}

TEST(GreedyExactTest, EachStepMaximizesExactGain) {
  const InstanceSpec spec = random_instance(21, 10, 9, false);
  const Selection s = greedy_exact(spec.base, spec.candidates, 5);
  Graph current = spec.base;
  std::vector<char> used(spec.candidates.size(), 0);
  for (int index : s.chosen) {
    double best = -1.0;
    int arg = -1;
    for (std::size_t j = 0; j < spec.candidates.size(); ++j) {
      if (used[j]) continue;
      const Edge& e = spec.candidates[j];
      const double score = e.weight * er_exact(current, e.u, e.v);
      if (score > best * (1.0 + 1e-12)) {
        best = score;
        arg = static_cast<int>(j);
      }
    }
    EXPECT_EQ(index, arg);
    used[index] = 1;
    current = current.with_edge(spec.candidates[index]);
  }
}

TEST(GreedyExactTest, Errors) {
  EXPECT_THROW(greedy_exact(gen_path(3), CandidateSet(), 1), DomainError);
  EXPECT_THROW(greedy_exact(gen_path(3), CandidateSet({{0, 2, 1}}), 0), DomainError);
  EXPECT_THROW(greedy_exact(build_graph(4, {{0, 1, 1}}), CandidateSet({{0, 2, 1}}), 1),
               SingularMinorError);
}

TEST(GreedyThTest, Examples) {
  const InstanceSpec spec = star_with_triangle();
  EXPECT_NEAR(greedy_th(spec.base, spec.candidates, 0.1, 2).total_log_gain, 3.0, 1e-9);

  const CandidateSet single({{0, 2, 1.0}});
  const Selection a = greedy_th(gen_path(3), single, 0.1, 1);
  const Selection b = greedy_exact(gen_path(3), single, 1);
  EXPECT_EQ(a.chosen, b.chosen);
  EXPECT_NEAR(a.total_log_gain, b.total_log_gain, 1e-12);

  EXPECT_THROW(greedy_th(gen_path(3), single, 0.0, 1), DomainError);
  EXPECT_THROW(greedy_th(gen_path(3), single, 0.75, 1), DomainError);
}

TEST(GreedyThTest, EqualScoresTakeSequencePrefix) {
  // Disjoint leaf pairs of a star all score w * er = 2 and never interact.
  const Graph star = gen_star(8);
  const CandidateSet q({{0, 1, 1}, {2, 3, 1}, {4, 5, 1}, {6, 7, 1}});
  const Selection s = greedy_th(star, q, 0.1, 2);
  EXPECT_EQ(s.chosen, (std::vector<int>{0, 1}));
}

TEST(AddAboveTest, BaseCases) {
  const Graph p3 = gen_path(3);
  const CandidateSet one({{0, 2, 1.0}});
  const double eps = 0.1;
  // w * er = 2; any threshold below (1 - 2 eps) * 2 is cleared.
  const Selection added = add_above(p3, one, 1.5, eps, 1);
  EXPECT_EQ(added.chosen, std::vector<int>{0});
  const Selection none = add_above(p3, one, 0.0, eps, 0);
  EXPECT_TRUE(none.chosen.empty());
  const Selection above = add_above(p3, one, 3.0, eps, 1);
  EXPECT_TRUE(above.chosen.empty());
  EXPECT_THROW(add_above(p3, one, -1.0, eps, 1), DomainError);
  EXPECT_THROW(add_above(p3, one, 1.0, 0.0, 1), DomainError);
}

TEST(AddAboveTest, CycleOnStarLeavesCertificate) {
  const Graph star = gen_star(4);
  const CandidateSet cycle({{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  const double eps = 0.05;
  const double th = 1.0;
  std::vector<AddAboveEvent> events;
  SolverOptions options;
  options.seed = 3;
  options.observer = [&](const AddAboveEvent& e) { events.push_back(e); };
  const Selection s = add_above(star, cycle, th, eps, 4, options);
  ASSERT_EQ(events.size(), 4u);
  ResistanceTracker tracker(star);
  for (const AddAboveEvent& e : events) {
    const Edge& edge = cycle[e.candidate];
    const double score = edge.weight * tracker.resistance(edge.u, edge.v);
    if (e.added) {
      EXPECT_GE(score, th / (1.0 + 2.0 * eps) - 1e-12);
      tracker.add_edge(edge);
    } else if (e.budget_before > 0) {
      EXPECT_LE(score, th / (1.0 - 2.0 * eps) + 1e-12);
    }
  }
  expect_well_formed(s, cycle.size(), 4);
}

TEST(NstmTest, StarWithTriangle) {
  const InstanceSpec spec = star_with_triangle();
  const Selection s = nstm_maximize(spec.base, spec.candidates, 0.1, 2);
  EXPECT_NEAR(s.total_log_gain, 3.0, 1e-9);
}

TEST(NstmTest, FullBudgetAddsEverything) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const InstanceSpec spec = random_instance(seed, 15, 8);
    const Selection s = nstm_maximize(spec.base, spec.candidates, 0.1, 8, {.seed = seed});
    EXPECT_EQ(s.chosen.size(), 8u);
    const Graph all = spec.base.with_edges(spec.candidates.pairs());
    EXPECT_NEAR(s.total_log_gain, log_tree_count(all) - log_tree_count(spec.base), 1e-9);
  }
}

TEST(NstmTest, FanReductionInstance) {
  // Hamiltonian path on 8 leaves plus three chords.
  std::vector<VertexPair> leaf_edges;
  for (int i = 0; i + 1 < 8; ++i) leaf_edges.emplace_back(i, i + 1);
  leaf_edges.insert(leaf_edges.end(), {{0, 4}, {2, 6}, {1, 7}});
  const InstanceSpec spec = gen_star_plus(8, leaf_edges);
  const double optimum = reference::best_gain(spec.base, spec.candidates.pairs(), 7);
  const Selection s = nstm_maximize(spec.base, spec.candidates, 0.1, 7);
  EXPECT_GE(s.total_log_gain, (kGreedyFactor - 0.1) * optimum);
}

TEST(NstmTest, Errors) {
  const CandidateSet q({{0, 2, 1}});
  EXPECT_THROW(nstm_maximize(gen_path(3), q, 0.1, 0), DomainError);
  EXPECT_THROW(nstm_maximize(gen_path(3), q, 0.1, 2), DomainError);
  EXPECT_THROW(nstm_maximize(gen_path(3), CandidateSet(), 0.1, 1), DomainError);
  EXPECT_THROW(nstm_maximize(gen_path(3), q, 0.6, 1), DomainError);
}

TEST(NstmTest, DeterministicForSeed) {
  const InstanceSpec spec = random_instance(8, 40, 30, false);
  const Selection a = nstm_maximize(spec.base, spec.candidates, 0.1, 6, {.seed = 5});
  const Selection b = nstm_maximize(spec.base, spec.candidates, 0.1, 6, {.seed = 5});
  EXPECT_EQ(a.chosen, b.chosen);
  EXPECT_EQ(a.total_log_gain, b.total_log_gain);
}

TEST(NstmTest, EstimatedLedgerIsFlagged) {
  const InstanceSpec spec = random_instance(9, 20, 10);
  SolverOptions options;
  options.exact_ledger = false;
  const Selection s = nstm_maximize(spec.base, spec.candidates, 0.1, 3, options);
  EXPECT_FALSE(s.exact_ledger);
  expect_well_formed(s, spec.candidates.size(), 3);
}

TEST(ThresholdScheduleTest, DecreasesGeometricallyToStop) {
  ThresholdSchedule schedule(8.0, 0.25, 1.0);
  EXPECT_EQ(schedule.initial(), 8.0);
  EXPECT_DOUBLE_EQ(schedule.factor(), 0.75);
  double previous = schedule.current();
  int passes = 0;
  while (schedule.active()) {
    EXPECT_GE(schedule.current(), schedule.stop_bound());
    schedule.advance();
    EXPECT_LT(schedule.current(), previous);
    previous = schedule.current();
    ++passes;
  }
  EXPECT_EQ(passes, 8);  // 8 * 0.75^7 >= 1 > 8 * 0.75^8
  EXPECT_THROW(ThresholdSchedule(1.0, 0.0, 0.1), DomainError);
  EXPECT_THROW(ThresholdSchedule(1.0, 1.0, 0.1), DomainError);
}

TEST(SplitErrorTest, ClampsSmallCandidateSets) {
  for (std::size_t q : {1u, 2u, 3u, 4u}) {
    const ErrorSplit split = split_error(0.3, q);
    EXPECT_DOUBLE_EQ(split.schur_eps, 0.3 * 2.0 / 3.0 / 2.0);
    EXPECT_DOUBLE_EQ(split.child_eps, 0.15);
  }
  const ErrorSplit big = split_error(0.3, 256);
  EXPECT_DOUBLE_EQ(big.schur_eps, 0.3 * 2.0 / 3.0 / 8.0);
  EXPECT_DOUBLE_EQ(big.child_eps, 0.3 * 7.0 / 8.0);
}

// Budget, ledger and per-step properties over a seeded corpus.
class MaximizerPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(MaximizerPropertyTest, SelectionsAreConsistent) {
  const auto seed = static_cast<std::uint64_t>(GetParam());
  const int n = 6 + GetParam() % 20;
  const int q = 3 + GetParam() % 15;
  const InstanceSpec spec = random_instance(seed, n, q, GetParam() % 2 == 0);
  const int k = 1 + GetParam() % q;
  const double eps = 0.1;
  const CandidateSet& cands = spec.candidates;

  const Selection exact = greedy_exact(spec.base, cands, k);
  const Selection th = greedy_th(spec.base, cands, eps, k);
  const Selection nstm = nstm_maximize(spec.base, cands, eps, k, {.seed = seed});
  const Selection above = add_above(spec.base, cands, 0.5, eps, k, {.seed = seed});
  for (const Selection* s : {&exact, &th, &nstm, &above}) {
    expect_well_formed(*s, cands.size(), k);
    EXPECT_NEAR(replayed_gain(spec.base, cands, *s), s->total_log_gain, 1e-6);
    const std::vector<double> ledger = ledger_gains(spec.base, cands, s->chosen);
    ASSERT_EQ(ledger.size(), s->chosen.size());
    for (std::size_t i = 0; i < ledger.size(); ++i) {
      EXPECT_NEAR(ledger[i], s->per_step_log_gain[i], 1e-9);
    }
  }
}

TEST_P(MaximizerPropertyTest, NstmStepsAreNearlyMaximal) {
  const auto seed = static_cast<std::uint64_t>(GetParam()) + 300;
  const int n = 6 + GetParam() % 15;
  const int q = 4 + GetParam() % 10;
  const InstanceSpec spec = random_instance(seed, n, q, false);
  const int k = 1 + GetParam() % q;
  const double eps = 0.1;
  const Selection s = nstm_maximize(spec.base, spec.candidates, eps, k, {.seed = seed});
  ResistanceTracker tracker(spec.base);
  std::vector<char> used(spec.candidates.size(), 0);
  for (int index : s.chosen) {
    const Edge& e = spec.candidates[index];
    const double chosen_gain = std::log2(1.0 + e.weight * tracker.resistance(e.u, e.v));
    for (std::size_t j = 0; j < spec.candidates.size(); ++j) {
      if (used[j] || static_cast<int>(j) == index) continue;
      const Edge& other = spec.candidates[j];
      const double gain = std::log2(1.0 + other.weight * tracker.resistance(other.u, other.v));
      EXPECT_LE(gain, chosen_gain / (1.0 - eps / 2.0) + 1e-9)
          << "candidate " << j << " against chosen " << index;
    }
    used[index] = 1;
    tracker.add_edge(e);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MaximizerPropertyTest, ::testing::Range(0, 60));

// Approximation guarantees against exhaustive search on small instances.
class ApproximationTest : public ::testing::TestWithParam<int> {};

TEST_P(ApproximationTest, WithinGreedyFactorOfOptimum) {
  const auto seed = static_cast<std::uint64_t>(GetParam()) + 7000;
  const int n = 4 + GetParam() % 7;
  const int q = 2 + GetParam() % 11;
  const InstanceSpec spec = random_instance(seed, n, q, GetParam() % 3 != 0);
  const int k = 1 + GetParam() % std::min(4, q);
  const double optimum = reference::best_gain(spec.base, spec.candidates.pairs(), k);
  const double eps = 0.1;
  EXPECT_GE(greedy_exact(spec.base, spec.candidates, k).total_log_gain,
            kGreedyFactor * optimum - 1e-9);
  EXPECT_GE(greedy_th(spec.base, spec.candidates, eps, k).total_log_gain,
            (kGreedyFactor - eps) * optimum - 1e-9);
  EXPECT_GE(nstm_maximize(spec.base, spec.candidates, eps, k, {.seed = seed}).total_log_gain,
            (kGreedyFactor - eps) * optimum - 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ApproximationTest, ::testing::Range(0, 200));

}  // namespace
}  // namespace spantree
