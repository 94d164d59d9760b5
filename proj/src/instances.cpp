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
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "spantree/error.hpp"
#include "spantree/random.hpp"

namespace spantree {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::vector<Edge> star_edges(int n) {
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int leaf = 0; leaf < n; ++leaf) edges.push_back({leaf, n, 1.0});
  return edges;
}

}  // namespace

Graph gen_path(int n) {
  require(n >= 1, "gen_path: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
  require(n >= 3, "gen_cycle: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, std::move(edges));
}

Graph gen_star(int n) {
  require(n >= 1, "gen_star: need n >= 1 leaves");
  return Graph(n + 1, star_edges(n));
}

Graph gen_fan(int n) {
  require(n >= 1, "gen_fan: need n >= 1 leaves");
  std::vector<Edge> edges = star_edges(n);
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph(n + 1, std::move(edges));
}

Graph gen_wheel(int n) {
  require(n >= 3, "gen_wheel: need n >= 3 leaves");
  std::vector<Edge> edges = star_edges(n);
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph(n + 1, std::move(edges));
}

Graph gen_complete(int n) {
  require(n >= 1, "gen_complete: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  }
  return Graph(n, std::move(edges));
}

InstanceSpec gen_star_plus(int n, std::span<const VertexPair> leaf_edges) {
  require(n >= 2, "gen_star_plus: need n >= 2 leaves");
  std::vector<Edge> candidates;
  candidates.reserve(leaf_edges.size());
  for (const auto& [u, v] : leaf_edges) {
    if (u == n || v == n) {
      throw GraphError("gen_star_plus: leaf edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") touches the star center");
    }
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
      throw GraphError("gen_star_plus: invalid leaf edge (" + std::to_string(u) +
                       ", " + std::to_string(v) + ")");
    }
    candidates.push_back({u, v, 1.0});
  }
  require(!candidates.empty(), "gen_star_plus: no candidates");
  InstanceSpec spec;
  spec.base = gen_star(n);
  spec.k = n - 1;
  if (spec.k > static_cast<int>(candidates.size())) {
    spec.k = static_cast<int>(candidates.size());
    spec.k_clamped = true;
  }
  spec.candidates = CandidateSet(std::move(candidates));
  spec.label = "star-plus";
  return spec;
}

InstanceSpec gen_tsp12(const Eigen::MatrixXi& dist) {
  const int n = static_cast<int>(dist.rows());
  require(dist.cols() == n && n >= 2, "gen_tsp12: distance matrix must be square, n >= 2");
  std::vector<VertexPair> ones;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      require(dist(i, j) == dist(j, i), "gen_tsp12: distance matrix is not symmetric");
      require(dist(i, j) == 1 || dist(i, j) == 2,
              "gen_tsp12: off-diagonal distances must be 1 or 2");
      if (i < j && dist(i, j) == 1) ones.emplace_back(i, j);
    }
  }
  InstanceSpec spec = gen_star_plus(n, ones);
  spec.label = "tsp12";
  return spec;
}

InstanceSpec gen_random(const RandomInstanceParams& p) {
  require(p.n >= 2, "gen_random: need n >= 2");
  require(p.m_extra >= 0 && p.q >= 1, "gen_random: need m_extra >= 0 and q >= 1");
  require(p.weight_lo > 0.0 && p.weight_hi >= p.weight_lo,
          "gen_random: weight range must be positive and ordered");
  Rng rng(derive_seed(p.seed, streams::kInstances));

  auto weight = [&]() {
    if (p.integer_weights) {
      std::uniform_int_distribution<long long> draw(
          static_cast<long long>(std::ceil(p.weight_lo)),
          static_cast<long long>(std::floor(p.weight_hi)));
      return static_cast<double>(draw(rng));
    }
    std::uniform_real_distribution<double> draw(p.weight_lo, p.weight_hi);
    return draw(rng);
  };
  auto random_pair = [&]() {
    std::uniform_int_distribution<int> pick(0, p.n - 1);
    const int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    return std::make_pair(std::min(u, v), std::max(u, v));
  };

  std::vector<int> order(p.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < p.n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    const int u = order[i];
    const int v = order[parent(rng)];
    edges.push_back({std::min(u, v), std::max(u, v), weight()});
  }
  for (int i = 0; i < p.m_extra; ++i) {
    const auto [u, v] = random_pair();
    edges.push_back({u, v, weight()});
  }
  std::vector<Edge> candidates;
  for (int i = 0; i < p.q; ++i) {
    const auto [u, v] = random_pair();
    candidates.push_back({u, v, weight()});
  }

  InstanceSpec spec;
  spec.base = Graph(p.n, std::move(edges));
  spec.candidates = CandidateSet(std::move(candidates));
  spec.k = std::clamp(p.k, 1, p.q);
  spec.seed = p.seed;
  spec.label = "random";
  return spec;
}

}  // namespace spantree
