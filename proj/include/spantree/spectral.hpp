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

#ifndef SPANTREE_SPECTRAL_HPP_
#define SPANTREE_SPECTRAL_HPP_

#include <memory>
#include <optional>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include "spantree/graph.hpp"

namespace spantree {

inline constexpr double kDefaultSolveTolerance = 1e-10;

// Largest accepted ratio between the heaviest edge and the lightest edge of a
// maximum spanning tree before factorization refuses the graph.
inline constexpr double kMaxWeightRatio = 1e12;

// Sparse LDL^T factorization of the grounded Laplacian minor L_{-g}, where g is
// the grounded vertex. Vectors passed to solve() live in the minor's
// coordinates (the grounded coordinate removed); potentials() works in the
// full vertex space with the grounded vertex pinned at zero.
//
// Immutable after construction. Copies share the factorization and concurrent
// solves are permitted.
class LaplacianFactor {
 public:
  // Throws SingularMinorError if g is disconnected or the weight spread along
  // a maximum spanning tree exceeds kMaxWeightRatio. The grounded vertex defaults to n-1.
  LaplacianFactor(const Graph& g, std::optional<Vertex> grounded = std::nullopt,
                  double solve_tolerance = kDefaultSolveTolerance);

  int num_vertices() const { return n_; }
  int dimension() const { return n_ - 1; }
  Vertex grounded_vertex() const { return grounded_; }
  double solve_tolerance() const { return tolerance_; }
  std::uint64_t source_fingerprint() const { return source_; }

  // x with ||L_{-g} x - b|| <= tol * ||b||. Throws DomainError on a
  // dimension mismatch.
  Eigen::VectorXd solve(const Eigen::Ref<const Eigen::VectorXd>& b) const;

  // Solves L x = rhs for a full-length rhs with zero sum, returning the
  // potential vector with x(grounded) = 0.
  Eigen::VectorXd potentials(const Eigen::Ref<const Eigen::VectorXd>& rhs) const;

  // log2 det(L_{-g}) = log2 of the weighted spanning tree count.
  double log2_determinant() const { return log2_det_; }

  // Map between full vertex ids and minor coordinates.
  int to_minor(Vertex v) const { return v < grounded_ ? v : v - 1; }
  Vertex from_minor(int i) const { return i < grounded_ ? i : i + 1; }

 private:
  using Solver = Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower,
                                       Eigen::AMDOrdering<int>>;

  int n_ = 0;
  Vertex grounded_ = 0;
  double tolerance_ = kDefaultSolveTolerance;
  double log2_det_ = 0.0;
  std::uint64_t source_ = 0;
  std::shared_ptr<const Eigen::SparseMatrix<double>> minor_;
  std::shared_ptr<const Solver> solver_;
};

LaplacianFactor factorize(const Graph& g, std::optional<Vertex> grounded = std::nullopt,
                          double tol = kDefaultSolveTolerance);

Eigen::VectorXd solve(const LaplacianFactor& f,
                      const Eigen::Ref<const Eigen::VectorXd>& b);

// log2 T(G) via the matrix-tree theorem.
double log_tree_count(const Graph& g);

// log2(1 + weight * resistance): the log-gain of adding one edge.
double log2_gain(double weight, double resistance);

// log2 T(G + (u,v)) given log2 T(G), the new edge's weight and er^G(u,v).
double det_lemma_update(double log_tree, double weight, double resistance);

// Grounded minor of a dense Laplacian: drops row and column `grounded`.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
grounded_minor(const Eigen::MatrixBase<Derived>& lap, Eigen::Index grounded) {
  using Matrix =
      Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = lap.rows();
  Matrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == grounded) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == grounded) continue;
      out(oi, oj) = lap(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

}  // namespace spantree

#endif  // SPANTREE_SPECTRAL_HPP_
