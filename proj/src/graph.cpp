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

#include "spantree/graph.hpp"

#include <cmath>
#include <cstring>
#include <numeric>
#include <sstream>
#include <string>

#include "spantree/error.hpp"
#include "spantree/random.hpp"

namespace spantree {
namespace {

std::string describe(std::size_t index, const Edge& e) {
  std::ostringstream os;
  os << "edge #" << index << " (" << e.u << ", " << e.v << ", " << e.weight
     << ")";
  return os.str();
}

void validate_edge(int n, std::size_t index, const Edge& e) {
  if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
    throw GraphError(describe(index, e) + ": vertex out of range [0, " +
                     std::to_string(n) + ")");
  }
  if (e.u == e.v) {
    throw GraphError(describe(index, e) + ": self-loop");
  }
  if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
    throw GraphError(describe(index, e) + ": weight must be positive and finite");
  }
}

// Union-find with path halving.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

IncidenceVector::IncidenceVector(Vertex u, Vertex v) : u(u), v(v) {
  if (u == v) throw GraphError("incidence vector of a self-loop");
}

Eigen::VectorXd IncidenceVector::dense(int n) const {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(u) = 1.0;
  b(v) = -1.0;
  return b;
}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) validate_edge(n_, i, edges_[i]);
}

double Graph::weighted_degree(Vertex v) const {
  double d = 0.0;
  for (const Edge& e : edges_) {
    if (e.u == v || e.v == v) d += e.weight;
  }
  return d;
}

Graph Graph::with_edge(const Edge& e) const {
  validate_edge(n_, edges_.size(), e);
  Graph out = *this;
  out.edges_.push_back(e);
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  Graph out = *this;
  out.edges_.reserve(edges_.size() + extra.size());
  for (const Edge& e : extra) {
    validate_edge(n_, out.edges_.size(), e);
    out.edges_.push_back(e);
  }
  return out;
}

std::uint64_t Graph::fingerprint() const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(n_));
  for (const Edge& e : edges_) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(e.weight));
    std::memcpy(&bits, &e.weight, sizeof(bits));
    h = mix64(h ^ static_cast<std::uint64_t>(e.u));
    h = mix64(h ^ static_cast<std::uint64_t>(e.v));
    h = mix64(h ^ bits);
  }
  return h;
}

CandidateSet::CandidateSet(std::vector<Edge> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const Edge& e = pairs_[i];
    if (e.u == e.v) throw GraphError("candidate " + describe(i, e) + ": self-loop");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw GraphError("candidate " + describe(i, e) +
                       ": weight must be positive and finite");
    }
  }
}

void CandidateSet::check_range(int n) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const Edge& e = pairs_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("candidate " + describe(i, e) +
                       ": vertex out of range [0, " + std::to_string(n) + ")");
    }
  }
}

Graph build_graph(int n, std::vector<Edge> edges) {
  return Graph(n, std::move(edges));
}

Graph add_edge(const Graph& g, const Edge& e) { return g.with_edge(e); }

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  return g.with_edges(extra);
}

int count_components(const Graph& g) {
  DisjointSets sets(g.num_vertices());
  int components = g.num_vertices();
  for (const Edge& e : g.edges()) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components;
}

bool is_connected(const Graph& g) { return count_components(g) == 1; }

Eigen::SparseMatrix<double> laplacian(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(4 * g.num_edges());
  for (const Edge& e : g.edges()) {
    triplets.emplace_back(e.u, e.v, -e.weight);
    triplets.emplace_back(e.v, e.u, -e.weight);
  }
  Eigen::SparseMatrix<double> off(n, n);
  off.setFromTriplets(triplets.begin(), triplets.end());
  // Diagonal is the negated sum of the merged off-diagonal row so that
  // integer and dyadic weights give exactly zero row sums.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  for (int col = 0; col < off.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(off, col); it; ++it) {
      diag(it.row()) -= it.value();
    }
  }
  std::vector<Eigen::Triplet<double>> all;
  all.reserve(off.nonZeros() + n);
  for (int col = 0; col < off.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(off, col); it; ++it) {
      all.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (int i = 0; i < n; ++i) all.emplace_back(i, i, diag(i));
  Eigen::SparseMatrix<double> lap(n, n);
  lap.setFromTriplets(all.begin(), all.end());
  return lap;
}

}  // namespace spantree
