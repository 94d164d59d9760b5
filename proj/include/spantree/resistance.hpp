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

#ifndef SPANTREE_RESISTANCE_HPP_
#define SPANTREE_RESISTANCE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spantree/graph.hpp"
#include "spantree/spectral.hpp"

namespace spantree {

// er(u,v) = b_uv^T L^+ b_uv. Throws SingularMinorError on a disconnected
// graph and DomainError when u == v.
double er_exact(const Graph& g, Vertex u, Vertex v);
double er_exact(const LaplacianFactor& factor, Vertex u, Vertex v);

struct ResistanceEstimate {
  VertexPair pair;
  double value = 0.0;
  double epsilon = 0.0;
};

// Number of random projections used by er_est: 8 * ceil(eps^-2 ln n).
int sketch_width(int n, double eps);

// Batch (1 +- eps) estimates from a random projection of W^{1/2} B L^+.
// Deterministic in `seed`; probe solves are spread over the worker pool.
// When sketch_width(n, eps) >= m the projection is computed exactly.
// Throws DomainError unless 0 < eps <= 1/2 and pairs is nonempty.
std::vector<ResistanceEstimate> er_est(const Graph& g,
                                       std::span<const VertexPair> pairs,
                                       double eps, std::uint64_t seed);

// Same as er_est but with an explicit projection count; used internally for
// coarse leverage estimates.
std::vector<double> sketch_resistances(const Graph& g,
                                       std::span<const VertexPair> pairs,
                                       int probes, std::uint64_t seed);

// Dense grounded inverse of L_{-n} kept current under edge insertions with
// rank-one Sherman-Morrison updates. Exact resistances in O(1) per query and
// O(n^2) per insertion; intended for n up to a few thousand.
class ResistanceTracker {
 public:
  explicit ResistanceTracker(const Graph& g);

  int num_vertices() const { return n_; }
  double resistance(Vertex u, Vertex v) const;
  void add_edge(const Edge& e);

 private:
  double entry(Vertex a, Vertex b) const;

  int n_ = 0;
  Vertex grounded_ = 0;
  Eigen::MatrixXd inverse_;
};

}  // namespace spantree

#endif  // SPANTREE_RESISTANCE_HPP_
