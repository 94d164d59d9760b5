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

#ifndef SPANTREE_GRAPH_HPP_
#define SPANTREE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace spantree {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

// Semantic form of b_{u,v} = e_u - e_v.
struct IncidenceVector {
  Vertex u;
  Vertex v;

  IncidenceVector(Vertex u, Vertex v);

  // Dense materialization in R^n.
  Eigen::VectorXd dense(int n) const;
};

// Weighted undirected multigraph on vertices 0..n-1. Parallel edges are kept
// as distinct entries in insertion order; they are merged only when the
// Laplacian is assembled. Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError naming the offending edge on an out-of-range vertex,
  // a self-loop, or a non-positive (or non-finite) weight.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  double weighted_degree(Vertex v) const;

  // Value-semantic augmentation; *this is left untouched.
  Graph with_edge(const Edge& e) const;
  Graph with_edges(std::span<const Edge> extra) const;

  // Order-sensitive fingerprint of (n, edges).
  std::uint64_t fingerprint() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Candidate edges Q for augmentation. Parallel edges to the base graph and to
// each other are allowed; vertex range is checked against the host graph by
// the solvers.
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::vector<Edge> pairs);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const Edge& operator[](std::size_t i) const { return pairs_[i]; }
  std::span<const Edge> pairs() const { return pairs_; }

  // Throws GraphError if any candidate leaves [0, n).
  void check_range(int n) const;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::vector<Edge> pairs_;
};

Graph build_graph(int n, std::vector<Edge> edges);
Graph add_edge(const Graph& g, const Edge& e);
Graph add_edges(const Graph& g, std::span<const Edge> extra);

bool is_connected(const Graph& g);
int count_components(const Graph& g);

// L = B^T W B with parallel edges summed.
Eigen::SparseMatrix<double> laplacian(const Graph& g);

// Dense Laplacian over any scalar type Eigen can hold.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense_laplacian(
    const Graph& g) {
  const int n = g.num_vertices();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> lap =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const Scalar w(e.weight);
    lap(e.u, e.v) -= w;
    lap(e.v, e.u) -= w;
  }
  for (int i = 0; i < n; ++i) {
    Scalar diag(0);
    for (int j = 0; j < n; ++j) {
      if (j != i) diag -= lap(i, j);
    }
    lap(i, i) = diag;
  }
  return lap;
}

// Rebuilds a graph from a Laplacian-like symmetric matrix: every strictly
// negative off-diagonal entry (i < j) with |entry| > drop_below becomes an
// edge of weight -entry.
template <typename Derived>
Graph graph_from_laplacian(const Eigen::MatrixBase<Derived>& lap,
                           double drop_below = 0.0) {
  const int n = static_cast<int>(lap.rows());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = -static_cast<double>(lap(i, j));
      if (w > drop_below) edges.push_back({i, j, w});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace spantree

#endif  // SPANTREE_GRAPH_HPP_
