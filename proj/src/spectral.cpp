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

#include "spantree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "spantree/error.hpp"

namespace spantree {
namespace {

constexpr int kMaxRefinementSteps = 3;

Eigen::SparseMatrix<double> minor_of(const Eigen::SparseMatrix<double>& lap,
                                     Vertex grounded) {
  const int n = static_cast<int>(lap.rows());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(lap.nonZeros());
  for (int col = 0; col < lap.outerSize(); ++col) {
    if (col == grounded) continue;
    for (Eigen::SparseMatrix<double>::InnerIterator it(lap, col); it; ++it) {
      const int row = static_cast<int>(it.row());
      if (row == grounded) continue;
      triplets.emplace_back(row < grounded ? row : row - 1,
                            col < grounded ? col : col - 1, it.value());
    }
  }
  Eigen::SparseMatrix<double> out(n - 1, n - 1);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

// Spread between the heaviest edge and the lightest edge of a maximum
// spanning tree. Light edges off that tree never limit conditioning.
void check_conditioning(const Graph& g) {
  std::vector<std::size_t> order(g.num_edges());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.edge(a).weight > g.edge(b).weight;
  });
  std::vector<Vertex> parent(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) parent[v] = v;
  const auto root = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  double hi = 0.0;
  double bottleneck = std::numeric_limits<double>::infinity();
  for (std::size_t i : order) {
    const Edge& e = g.edge(i);
    hi = std::max(hi, e.weight);
    const Vertex a = root(e.u);
    const Vertex b = root(e.v);
    if (a == b) continue;
    parent[a] = b;
    bottleneck = e.weight;
  }
  if (hi > 0.0 && hi / bottleneck > kMaxWeightRatio) {
    throw SingularMinorError("edge weight ratio " + std::to_string(hi / bottleneck) +
                             " along a maximum spanning tree exceeds the conditioning "
                             "limit; refusing to factor a numerically singular minor");
  }
}

}  // namespace

LaplacianFactor::LaplacianFactor(const Graph& g, std::optional<Vertex> grounded,
                                 double solve_tolerance)
    : n_(g.num_vertices()), tolerance_(solve_tolerance), source_(g.fingerprint()) {
  if (n_ < 1) throw SingularMinorError("singular minor: empty graph");
  grounded_ = grounded.value_or(n_ - 1);
  if (grounded_ < 0 || grounded_ >= n_) {
    throw DomainError("grounded vertex " + std::to_string(grounded_) +
                      " out of range");
  }
  if (!(solve_tolerance > 0.0)) throw DomainError("solve tolerance must be positive");
  if (!is_connected(g)) {
    throw SingularMinorError("singular minor: graph has " +
                             std::to_string(count_components(g)) + " components");
  }
  check_conditioning(g);
  auto minor = std::make_shared<Eigen::SparseMatrix<double>>(
      minor_of(laplacian(g), grounded_));
  minor_ = minor;
  if (n_ == 1) return;

  auto solver = std::make_shared<Solver>();
  solver->compute(*minor);
  if (solver->info() != Eigen::Success) {
    throw SingularMinorError("singular minor: factorization failed");
  }
  const Eigen::VectorXd d = solver->vectorD();
  double log2_det = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!(d(i) > 0.0)) {
      throw SingularMinorError("singular minor: non-positive pivot");
    }
    log2_det += std::log2(d(i));
  }
  log2_det_ = log2_det;
  solver_ = std::move(solver);
}

Eigen::VectorXd LaplacianFactor::solve(
    const Eigen::Ref<const Eigen::VectorXd>& b) const {
  if (b.size() != dimension()) {
    throw DomainError("solve: right-hand side has dimension " +
                      std::to_string(b.size()) + ", expected " +
                      std::to_string(dimension()));
  }
  if (dimension() == 0) return Eigen::VectorXd();
  const double bnorm = b.norm();
  if (bnorm == 0.0) return Eigen::VectorXd::Zero(b.size());
  Eigen::VectorXd x = solver_->solve(b);
  Eigen::VectorXd r = b - (*minor_) * x;
  for (int step = 0; step < kMaxRefinementSteps && r.norm() > tolerance_ * bnorm;
       ++step) {
    x += solver_->solve(r);
    r = b - (*minor_) * x;
  }
  if (!(r.norm() <= tolerance_ * bnorm)) {
    throw SingularMinorError("solve: relative residual " +
                             std::to_string(r.norm() / bnorm) +
                             " above tolerance");
  }
  return x;
}

Eigen::VectorXd LaplacianFactor::potentials(
    const Eigen::Ref<const Eigen::VectorXd>& rhs) const {
  if (rhs.size() != n_) {
    throw DomainError("potentials: right-hand side has dimension " +
                      std::to_string(rhs.size()) + ", expected " +
                      std::to_string(n_));
  }
  Eigen::VectorXd reduced(dimension());
  for (int i = 0; i < dimension(); ++i) reduced(i) = rhs(from_minor(i));
  const Eigen::VectorXd x = solve(reduced);
  Eigen::VectorXd full = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < dimension(); ++i) full(from_minor(i)) = x(i);
  return full;
}

LaplacianFactor factorize(const Graph& g, std::optional<Vertex> grounded,
                          double tol) {
  return LaplacianFactor(g, grounded, tol);
}

Eigen::VectorXd solve(const LaplacianFactor& f,
                      const Eigen::Ref<const Eigen::VectorXd>& b) {
  return f.solve(b);
}

double log_tree_count(const Graph& g) {
  return LaplacianFactor(g).log2_determinant();
}

double det_lemma_update(double log_tree, double weight, double resistance) {
  if (!(weight > 0.0)) throw DomainError("det_lemma_update: weight must be positive");
  if (resistance < 0.0) {
    throw DomainError("det_lemma_update: negative effective resistance " +
                      std::to_string(resistance));
  }
  return log_tree + log2_gain(weight, resistance);
}

double log2_gain(double weight, double resistance) {
  return std::log1p(weight * resistance) / std::numbers::ln2;
}

}  // namespace spantree
