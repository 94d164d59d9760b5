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

#ifndef SPANTREE_SCHUR_HPP_
#define SPANTREE_SCHUR_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "spantree/error.hpp"
#include "spantree/graph.hpp"
#include "spantree/spectral.hpp"

namespace spantree {

// Ordered terminal subset C of a host graph's vertices. Local index i of a
// Schur complement graph corresponds to host vertex vertices()[i].
class TerminalSet {
 public:
  // Throws DomainError on fewer than two vertices, duplicates, or vertices
  // outside [0, host_vertices).
  TerminalSet(std::vector<Vertex> vertices, int host_vertices);

  std::size_t size() const { return vertices_.size(); }
  int host_vertices() const { return host_; }
  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  // Local index of a host vertex, or -1 if it is not a terminal.
  int local_index(Vertex host_vertex) const { return local_[host_vertex]; }

  bool covers_host() const { return static_cast<int>(size()) == host_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<int> local_;
  int host_ = 0;
};

// Exact Schur complement SC(L, C), returned as a graph on local indices
// 0..|C|-1. Non-terminals are eliminated one at a time in increasing current
// degree order (star-mesh transform). When C covers every vertex the result
// is g with parallel edges merged.
Graph schur_exact(const Graph& g, const TerminalSet& terminals);

// Sparse graph S on C with (1-eps) SC <= S <= (1+eps) SC with probability at
// least 1 - delta: exact elimination followed by leverage-score edge
// sampling. |C| == 2 short-circuits to the exact equivalent edge.
Graph approx_schur(const Graph& g, const TerminalSet& terminals, double eps,
                   double delta, std::uint64_t seed);

// Number of edge samples approx_schur draws; never more than
// 40 |C| eps^-2 log2 n, which bounds the output edge count.
std::size_t schur_sample_count(std::size_t terminals, int host_vertices,
                               double eps, double delta, double oversample = 1.0);

struct SpectralRatio {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

// Extreme generalized Rayleigh quotients x^T A x / x^T B x over x orthogonal
// to the all-ones vector, for Laplacians A, B of connected graphs on the same
// vertex set. Laplacian forms are shift invariant, so the problem reduces to
// the pencil of grounded minors.
template <typename DerivedA, typename DerivedB>
SpectralRatio spectral_ratio(const Eigen::MatrixBase<DerivedA>& a,
                             const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DomainError("spectral_ratio: dimension mismatch (" +
                      std::to_string(a.rows()) + " vs " +
                      std::to_string(b.rows()) + ")");
  }
  const Eigen::Index n = a.rows();
  if (n < 2) throw DomainError("spectral_ratio: need at least two vertices");
  const Eigen::MatrixXd a_minor = grounded_minor(a.template cast<double>().eval(), n - 1);
  const Eigen::MatrixXd b_minor = grounded_minor(b.template cast<double>().eval(), n - 1);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a_minor, b_minor, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) {
    throw SingularMinorError("spectral_ratio: reference Laplacian is not connected");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.minCoeff(), values.maxCoeff()};
}

SpectralRatio spectral_ratio(const Graph& a, const Graph& b);

}  // namespace spantree

#endif  // SPANTREE_SCHUR_HPP_
