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

#ifndef SPANTREE_INSTANCES_HPP_
#define SPANTREE_INSTANCES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spantree/graph.hpp"

namespace spantree {

// One augmentation problem: base graph, candidates, budget and run knobs.
struct InstanceSpec {
  Graph base;
  CandidateSet candidates;
  int k = 1;
  double eps = 0.1;
  std::uint64_t seed = 0;
  std::string label;
  // Set when the requested k was larger than the candidate supply.
  bool k_clamped = false;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// Unit-weight families. Stars and the star-based families put the center at
// the highest index n and the leaves at 0..n-1.
Graph gen_path(int n);      // n >= 1 vertices
Graph gen_cycle(int n);     // n >= 3 vertices
Graph gen_star(int n);      // n >= 1 leaves
Graph gen_fan(int n);       // S_n plus a path on the leaves, n >= 1
Graph gen_wheel(int n);     // S_n plus a cycle on the leaves, n >= 3
Graph gen_complete(int n);  // n >= 1 vertices

// G = S_n, Q = E' (unit weights), k = n - 1 clamped to |E'|. Throws
// GraphError if an edge of E' touches the center or leaves [0, n), and
// DomainError if E' is empty.
InstanceSpec gen_star_plus(int n, std::span<const VertexPair> leaf_edges);

// (1,2)-TSP distance matrix to star-plus instance over its weight-1 edges.
InstanceSpec gen_tsp12(const Eigen::MatrixXi& dist);

struct RandomInstanceParams {
  int n = 2;
  int m_extra = 0;
  int q = 1;
  int k = 1;  // clamped to [1, q]
  double weight_lo = 1.0;
  double weight_hi = 1.0;
  // Draw integer weights uniformly from [weight_lo, weight_hi]; otherwise
  // real weights uniform on the interval.
  bool integer_weights = true;
  std::uint64_t seed = 0;
};

// Random spanning tree plus m_extra random edges as the base, q random
// candidate pairs. Fully determined by the parameters.
InstanceSpec gen_random(const RandomInstanceParams& params);

}  // namespace spantree

#endif  // SPANTREE_INSTANCES_HPP_
