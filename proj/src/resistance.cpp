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

#include "spantree/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spantree/error.hpp"
#include "spantree/parallel.hpp"
#include "spantree/random.hpp"

namespace spantree {
namespace {

constexpr std::size_t kProbesPerTask = 32;

void check_pair(int n, Vertex u, Vertex v) {
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw DomainError("resistance query (" + std::to_string(u) + ", " +
                      std::to_string(v) + ") out of range");
  }
  if (u == v) {
    throw DomainError("resistance query with u == v (" + std::to_string(u) + ")");
  }
}

}  // namespace

double er_exact(const LaplacianFactor& factor, Vertex u, Vertex v) {
  check_pair(factor.num_vertices(), u, v);
  const Eigen::VectorXd x =
      factor.potentials(IncidenceVector(u, v).dense(factor.num_vertices()));
  return std::max(0.0, x(u) - x(v));
}

double er_exact(const Graph& g, Vertex u, Vertex v) {
  check_pair(g.num_vertices(), u, v);
  return er_exact(LaplacianFactor(g), u, v);
}

int sketch_width(int n, double eps) {
  const double ln_n = std::log(std::max(n, 2));
  return 8 * static_cast<int>(std::ceil(ln_n / (eps * eps)));
}

std::vector<double> sketch_resistances(const Graph& g,
                                       std::span<const VertexPair> pairs,
                                       int probes, std::uint64_t seed) {
  const int n = g.num_vertices();
  for (const auto& [u, v] : pairs) check_pair(n, u, v);
  if (probes < 1) throw DomainError("sketch needs at least one probe");
  const LaplacianFactor factor(g);

  std::vector<double> sqrt_w(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    sqrt_w[e] = std::sqrt(g.edge(e).weight);
  }
  const std::uint64_t sketch_seed = derive_seed(seed, streams::kResistanceSketch);
  const std::size_t total = static_cast<std::size_t>(probes);
  const std::size_t tasks = (total + kProbesPerTask - 1) / kProbesPerTask;
  std::vector<std::vector<double>> partial(tasks,
                                           std::vector<double>(pairs.size(), 0.0));

  parallel_for(tasks, [&](std::size_t task) {
    Eigen::VectorXd rhs(n);
    std::vector<double>& acc = partial[task];
    const std::size_t end = std::min(total, (task + 1) * kProbesPerTask);
    for (std::size_t probe = task * kProbesPerTask; probe < end; ++probe) {
      rhs.setZero();
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        const double s = random_sign(sketch_seed, probe, e) * sqrt_w[e];
        rhs(edge.u) += s;
        rhs(edge.v) -= s;
      }
      const Eigen::VectorXd z = factor.potentials(rhs);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const double d = z(pairs[p].first) - z(pairs[p].second);
        acc[p] += d * d;
      }
    }
  });

  std::vector<double> out(pairs.size(), 0.0);
  for (const auto& acc : partial) {
    for (std::size_t p = 0; p < pairs.size(); ++p) out[p] += acc[p];
  }
  for (double& value : out) value /= static_cast<double>(probes);
  return out;
}

namespace {

// A sketch at least as wide as the edge count reduces nothing; project onto
// the edge coordinates exactly, or solve per pair when that is cheaper.
std::vector<double> exact_projection(const Graph& g, std::span<const VertexPair> pairs) {
  const int n = g.num_vertices();
  for (const auto& [u, v] : pairs) check_pair(n, u, v);
  const LaplacianFactor factor(g);
  std::vector<double> out(pairs.size(), 0.0);
  if (pairs.size() <= g.num_edges()) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      out[p] = er_exact(factor, pairs[p].first, pairs[p].second);
    }
    return out;
  }
  Eigen::VectorXd rhs(n);
  for (const Edge& e : g.edges()) {
    rhs.setZero();
    rhs(e.u) = std::sqrt(e.weight);
    rhs(e.v) = -rhs(e.u);
    const Eigen::VectorXd z = factor.potentials(rhs);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const double d = z(pairs[p].first) - z(pairs[p].second);
      out[p] += d * d;
    }
  }
  return out;
}

}  // namespace

std::vector<ResistanceEstimate> er_est(const Graph& g,
                                       std::span<const VertexPair> pairs,
                                       double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw DomainError("er_est: eps must lie in (0, 1/2], got " + std::to_string(eps));
  }
  if (pairs.empty()) throw DomainError("er_est: no query pairs");
  const int width = sketch_width(g.num_vertices(), eps);
  const std::vector<double> values = static_cast<std::size_t>(width) >= g.num_edges()
                                         ? exact_projection(g, pairs)
                                         : sketch_resistances(g, pairs, width, seed);
  std::vector<ResistanceEstimate> out;
  out.reserve(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    out.push_back({pairs[p], values[p], eps});
  }
  return out;
}

ResistanceTracker::ResistanceTracker(const Graph& g)
    : n_(g.num_vertices()), grounded_(g.num_vertices() - 1) {
  if (n_ < 1 || !is_connected(g)) {
    throw SingularMinorError("singular minor: graph is not connected");
  }
  if (n_ == 1) return;
  const Eigen::MatrixXd minor = grounded_minor(dense_laplacian(g), grounded_);
  Eigen::LLT<Eigen::MatrixXd> llt(minor);
  if (llt.info() != Eigen::Success) {
    throw SingularMinorError("singular minor: dense factorization failed");
  }
  inverse_ = llt.solve(Eigen::MatrixXd::Identity(n_ - 1, n_ - 1));
}

double ResistanceTracker::entry(Vertex a, Vertex b) const {
  if (a == grounded_ || b == grounded_) return 0.0;
  return inverse_(a, b);
}

double ResistanceTracker::resistance(Vertex u, Vertex v) const {
  check_pair(n_, u, v);
  return std::max(0.0, entry(u, u) + entry(v, v) - 2.0 * entry(u, v));
}

void ResistanceTracker::add_edge(const Edge& e) {
  check_pair(n_, e.u, e.v);
  // y = M^{-1} b restricted to the minor; grounded vertex is last.
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n_ - 1);
  if (e.u != grounded_) y += inverse_.col(e.u);
  if (e.v != grounded_) y -= inverse_.col(e.v);
  const double r = resistance(e.u, e.v);
  inverse_.noalias() -= (e.weight / (1.0 + e.weight * r)) * y * y.transpose();
}

}  // namespace spantree
