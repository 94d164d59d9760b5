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

#include "spantree/instances.hpp"

#include <algorithm>

#include "gtest/gtest.h"
#include "reference.hpp"
#include "spantree/error.hpp"
#include "spantree/instance_io.hpp"
#include "spantree/oracle.hpp"

namespace spantree {
namespace {

constexpr std::uint64_t kRandomGoldenFingerprint = 10944204792841498125ULL;

std::vector<std::tuple<int, int, double>> sorted_edges(const Graph& g) {
  std::vector<std::tuple<int, int, double>> out;
  for (const Edge& e : g.edges()) {
    out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), e.weight);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(FamiliesTest, SmallCases) {
  EXPECT_EQ(sorted_edges(gen_fan(2)), sorted_edges(build_graph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}})));
  EXPECT_EQ(sorted_edges(gen_wheel(3)), sorted_edges(gen_complete(4)));
  const Graph star = gen_star(4);
  EXPECT_EQ(star.num_vertices(), 5);
  EXPECT_EQ(star.num_edges(), 4u);
  for (const Edge& e : star.edges()) EXPECT_TRUE(e.u == 4 || e.v == 4);
  EXPECT_THROW(gen_cycle(2), DomainError);
  EXPECT_THROW(gen_wheel(2), DomainError);
  EXPECT_THROW(gen_fan(0), DomainError);
  EXPECT_THROW(gen_path(0), DomainError);
}

TEST(FamiliesTest, TreeCountIdentities) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(tree_count_exact(gen_star(n)).integer(), 1);
    EXPECT_EQ(tree_count_exact(gen_cycle(n)).integer(), n);
    EXPECT_EQ(tree_count_exact(gen_path(n)).integer(), 1);
    EXPECT_EQ(reference::tree_count(gen_fan(n)), reference::fibonacci(2 * n));
  }
}

TEST(StarPlusTest, PathOnFourLeaves) {
  const VertexPair path[] = {{0, 1}, {1, 2}, {2, 3}};
  const InstanceSpec spec = gen_star_plus(4, path);
  EXPECT_EQ(spec.k, 3);
  EXPECT_FALSE(spec.k_clamped);
  const BruteForceResult r = brute_force_opt(spec.base, spec.candidates, spec.k);
  EXPECT_EQ(r.subset, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r.best_count, fan_count(4).value);
  EXPECT_EQ(fan_count(4).integer(), 21);
}

TEST(StarPlusTest, MatchingClampsBudget) {
  const VertexPair matching[] = {{0, 1}, {2, 3}};
  const InstanceSpec spec = gen_star_plus(4, matching);
  EXPECT_EQ(spec.k, 2);
  EXPECT_TRUE(spec.k_clamped);
}

TEST(StarPlusTest, FiveCycle) {
  const VertexPair cycle[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  const InstanceSpec spec = gen_star_plus(5, cycle);
  const BruteForceResult r = brute_force_opt(spec.base, spec.candidates, 4);
  EXPECT_EQ(r.best_count, Rational(55));
}

TEST(StarPlusTest, Errors) {
  const VertexPair center[] = {{0, 4}};
  EXPECT_THROW(gen_star_plus(4, center), GraphError);
  const VertexPair loop[] = {{1, 1}};
  EXPECT_THROW(gen_star_plus(4, loop), GraphError);
  EXPECT_THROW(gen_star_plus(4, std::span<const VertexPair>()), DomainError);
}

TEST(StarPlusTest, HamiltonianPathCompletesToFan) {
  for (int n = 2; n <= 9; ++n) {
    std::vector<VertexPair> path;
    for (int i = 0; i + 1 < n; ++i) path.emplace_back(i, i + 1);
    const InstanceSpec spec = gen_star_plus(n, path);
    EXPECT_EQ(sorted_edges(spec.base.with_edges(spec.candidates.pairs())),
              sorted_edges(gen_fan(n)));
  }
}

TEST(Tsp12Test, Matrices) {
  const Eigen::MatrixXi ones = Eigen::MatrixXi::Ones(5, 5);
  const InstanceSpec complete = gen_tsp12(ones);
  EXPECT_EQ(complete.candidates.size(), 10u);
  EXPECT_EQ(complete.base.num_vertices(), 6);

  const Eigen::MatrixXi twos = Eigen::MatrixXi::Constant(5, 5, 2);
  try {
    gen_tsp12(twos);
    FAIL() << "empty candidate set accepted";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("no candidates"), std::string::npos);
  }

  Eigen::MatrixXi bad = ones;
  bad(0, 1) = 3;
  bad(1, 0) = 3;
  EXPECT_THROW(gen_tsp12(bad), DomainError);
  Eigen::MatrixXi asymmetric = ones;
  asymmetric(0, 1) = 2;
  EXPECT_THROW(gen_tsp12(asymmetric), DomainError);
}

TEST(Tsp12Test, HamiltonianPathOfOnesReachesFanCount) {
  const int n = 7;
  Eigen::MatrixXi dist = Eigen::MatrixXi::Constant(n, n, 2);
  const int order[] = {3, 0, 6, 2, 5, 1, 4};
  for (int i = 0; i + 1 < n; ++i) {
    dist(order[i], order[i + 1]) = 1;
    dist(order[i + 1], order[i]) = 1;
  }
  dist(0, 5) = dist(5, 0) = 1;
  const InstanceSpec spec = gen_tsp12(dist);
  EXPECT_EQ(brute_force_opt(spec.base, spec.candidates, n - 1).best_count, fan_count(n).value);
}

TEST(RandomInstanceTest, DeterministicGolden) {
  RandomInstanceParams p;
  p.n = 5;
  p.m_extra = 2;
  p.q = 4;
  p.seed = 7;
  const InstanceSpec a = gen_random(p);
  const InstanceSpec b = gen_random(p);
  EXPECT_EQ(a, b);
  EXPECT_EQ(serialize_instance(a), serialize_instance(b));
  EXPECT_EQ(a.base.fingerprint(), kRandomGoldenFingerprint);
  p.seed = 8;
  EXPECT_NE(gen_random(p).base.fingerprint(), a.base.fingerprint());
}

TEST(RandomInstanceTest, MinimalInstance) {
  RandomInstanceParams p;
  p.n = 2;
  p.seed = 123;
  const InstanceSpec spec = gen_random(p);
  EXPECT_EQ(spec.base.num_edges(), 1u);
  ASSERT_EQ(spec.candidates.size(), 1u);
  EXPECT_EQ(std::minmax(spec.candidates[0].u, spec.candidates[0].v), std::minmax(0, 1));
  EXPECT_THROW(gen_random({.n = 1}), DomainError);
}

TEST(RandomInstanceTest, SmallEnoughForBruteForce) {
  RandomInstanceParams p;
  p.n = 10;
  p.m_extra = 5;
  p.q = 12;
  p.weight_lo = 1;
  p.weight_hi = 4;
  p.seed = 42;
  const InstanceSpec spec = gen_random(p);
  EXPECT_LE(subsets_up_to(spec.candidates.size(), 4), kBruteForceSubsetLimit);
  EXPECT_NO_THROW(brute_force_opt(spec.base, spec.candidates, 4));
  for (const Edge& e : spec.base.edges()) {
    EXPECT_GE(e.weight, 1.0);
    EXPECT_LE(e.weight, 4.0);
    EXPECT_EQ(e.weight, std::floor(e.weight));
  }
}

class RandomInstancePropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(RandomInstancePropertyTest, ConnectedAndWithinBudget) {
  RandomInstanceParams p;
  p.n = 2 + GetParam() % 30;
  p.m_extra = GetParam() % 7;
  p.q = 1 + GetParam() % 9;
  p.k = GetParam() % 12;
  p.weight_lo = 0.5;
  p.weight_hi = 2.5;
  p.integer_weights = false;
  p.seed = static_cast<std::uint64_t>(GetParam());
  const InstanceSpec spec = gen_random(p);
  EXPECT_TRUE(is_connected(spec.base));
  EXPECT_EQ(spec.base.num_edges(), static_cast<std::size_t>(p.n - 1 + p.m_extra));
  EXPECT_EQ(spec.candidates.size(), static_cast<std::size_t>(p.q));
  EXPECT_GE(spec.k, 1);
  EXPECT_LE(spec.k, p.q);
  for (const Edge& e : spec.candidates.pairs()) {
    EXPECT_GE(e.weight, 0.5);
    EXPECT_LE(e.weight, 2.5);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomInstancePropertyTest, ::testing::Range(0, 60));

}  // namespace
}  // namespace spantree
