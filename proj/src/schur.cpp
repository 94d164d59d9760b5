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

#include "spantree/schur.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "spantree/random.hpp"
#include "spantree/resistance.hpp"

namespace spantree {
namespace {

// Above this many terminals leverage scores come from a coarse sketch
// instead of a dense inverse.
constexpr std::size_t kDenseLeverageLimit = 400;
constexpr int kMaxSamplingAttempts = 4;
// Hosts up to this size with average degree at least n / 16 are reduced with
// dense Cholesky instead of star-mesh elimination.
constexpr int kDenseSchurLimit = 2048;

using Adjacency = std::vector<std::unordered_map<Vertex, double>>;

Adjacency adjacency_of(const Graph& g) {
  Adjacency adj(g.num_vertices());
  for (const Edge& e : g.edges()) {
    adj[e.u][e.v] += e.weight;
    adj[e.v][e.u] += e.weight;
  }
  return adj;
}

void eliminate(Adjacency& adj, Vertex x) {
  std::vector<std::pair<Vertex, double>> nbrs(adj[x].begin(), adj[x].end());
  std::sort(nbrs.begin(), nbrs.end());
  double degree = 0.0;
  for (const auto& [j, w] : nbrs) {
    degree += w;
    adj[j].erase(x);
  }
  adj[x].clear();
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      const double w = nbrs[a].second * nbrs[b].second / degree;
      adj[nbrs[a].first][nbrs[b].first] += w;
      adj[nbrs[b].first][nbrs[a].first] += w;
    }
  }
}

bool prefer_dense(const Graph& g) {
  const double n = g.num_vertices();
  return g.num_vertices() <= kDenseSchurLimit &&
         2.0 * static_cast<double>(g.num_edges()) >= n * n / 16.0;
}

// SC = L_CC - L_CF L_FF^{-1} L_FC with a dense Cholesky of L_FF.
Graph dense_schur(const Graph& g, const TerminalSet& terminals) {
  const int n = g.num_vertices();
  const int c = static_cast<int>(terminals.size());
  std::vector<Vertex> interior;
  interior.reserve(n - c);
  for (Vertex v = 0; v < n; ++v) {
    if (terminals.local_index(v) < 0) interior.push_back(v);
  }
  const Eigen::MatrixXd lap = dense_laplacian(g);
  const int f = static_cast<int>(interior.size());
  Eigen::MatrixXd cc(c, c), cf(c, f), ff(f, f);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) cc(i, j) = lap(terminals[i], terminals[j]);
    for (int j = 0; j < f; ++j) cf(i, j) = lap(terminals[i], interior[j]);
  }
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < f; ++j) ff(i, j) = lap(interior[i], interior[j]);
  }
  Eigen::MatrixXd sc = cc;
  if (f > 0) {
    const Eigen::LLT<Eigen::MatrixXd> chol(ff);
    if (chol.info() != Eigen::Success) {
      throw SingularMinorError("schur_exact: interior block is not positive definite");
    }
    const Eigen::MatrixXd half = chol.matrixL().solve(cf.transpose());
    sc.noalias() -= half.transpose() * half;
  }
  // Structural zeros come back as rounding residue.
  const double floor = 1e-15 * sc.diagonal().maxCoeff();
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) {
    for (int j = i + 1; j < c; ++j) {
      const double w = -0.5 * (sc(i, j) + sc(j, i));
      if (w > floor) edges.push_back({i, j, w});
    }
  }
  return Graph(c, std::move(edges));
}

std::vector<double> leverage_scores(const Graph& s, std::uint64_t seed) {
  std::vector<double> scores(s.num_edges());
  if (static_cast<std::size_t>(s.num_vertices()) <= kDenseLeverageLimit) {
    const ResistanceTracker tracker(s);
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
      const Edge& edge = s.edge(e);
      scores[e] = edge.weight * tracker.resistance(edge.u, edge.v);
    }
    return scores;
  }
  std::vector<VertexPair> pairs;
  pairs.reserve(s.num_edges());
  for (const Edge& e : s.edges()) pairs.emplace_back(e.u, e.v);
  const std::vector<double> er =
      sketch_resistances(s, pairs, sketch_width(s.num_vertices(), 0.5), seed);
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    scores[e] = s.edge(e).weight * er[e];
  }
  return scores;
}

Graph sample_edges(const Graph& s, const std::vector<double>& scores,
                   std::size_t samples, std::uint64_t seed) {
  double total = 0.0;
  for (double l : scores) total += l;
  Rng rng(seed);
  std::vector<Edge> kept;
  long long remaining = static_cast<long long>(samples);
  double remaining_mass = total;
  for (std::size_t e = 0; e < s.num_edges() && remaining > 0; ++e) {
    const double p = scores[e] / total;
    long long count = remaining;
    if (e + 1 < s.num_edges()) {
      const double conditional =
          remaining_mass > 0.0 ? std::clamp(scores[e] / remaining_mass, 0.0, 1.0) : 1.0;
      std::binomial_distribution<long long> draw(remaining, conditional);
      count = draw(rng);
    }
    remaining -= count;
    remaining_mass -= scores[e];
    if (count > 0) {
      const Edge& edge = s.edge(e);
      kept.push_back({edge.u, edge.v,
                      static_cast<double>(count) * edge.weight /
                          (static_cast<double>(samples) * p)});
    }
  }
  return Graph(s.num_vertices(), std::move(kept));
}

}  // namespace

TerminalSet::TerminalSet(std::vector<Vertex> vertices, int host_vertices)
    : vertices_(std::move(vertices)), local_(std::max(host_vertices, 0), -1),
      host_(host_vertices) {
  if (vertices_.empty()) throw DomainError("terminal set is empty");
  if (vertices_.size() < 2) throw DomainError("terminal set needs at least two vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex v = vertices_[i];
    if (v < 0 || v >= host_) {
      throw DomainError("terminal " + std::to_string(v) + " outside host graph");
    }
    if (local_[v] != -1) {
      throw DomainError("terminal " + std::to_string(v) + " listed twice");
    }
    local_[v] = static_cast<int>(i);
  }
}

Graph schur_exact(const Graph& g, const TerminalSet& terminals) {
  if (terminals.host_vertices() != g.num_vertices()) {
    throw DomainError("terminal set was built for a different host graph");
  }
  if (!is_connected(g)) {
    throw SingularMinorError("schur_exact: host graph is not connected");
  }
  if (prefer_dense(g)) return dense_schur(g, terminals);
  Adjacency adj = adjacency_of(g);

  using Entry = std::pair<std::size_t, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> order;
  std::vector<char> eliminated(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (terminals.local_index(v) < 0) order.emplace(adj[v].size(), v);
  }
  while (!order.empty()) {
    const auto [degree, x] = order.top();
    order.pop();
    if (eliminated[x] || degree != adj[x].size()) continue;
    std::vector<Vertex> touched;
    touched.reserve(adj[x].size());
    for (const auto& kv : adj[x]) touched.push_back(kv.first);
    eliminate(adj, x);
    eliminated[x] = 1;
    for (Vertex j : touched) {
      if (terminals.local_index(j) < 0) order.emplace(adj[j].size(), j);
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (const auto& [j, w] : adj[terminals[i]]) {
      const int local = terminals.local_index(j);
      if (local > static_cast<int>(i) && w > 0.0) {
        edges.push_back({static_cast<Vertex>(i), local, w});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return Graph(static_cast<int>(terminals.size()), std::move(edges));
}

std::size_t schur_sample_count(std::size_t terminals, int host_vertices,
                               double eps, double delta, double oversample) {
  const double c = static_cast<double>(terminals);
  // Matrix Chernoff with leverage-proportional sampling.
  const double chernoff =
      oversample * 3.0 * (c - 1.0) * std::log(2.0 * c / delta) / (eps * eps);
  const double cap =
      40.0 * c * std::log2(std::max(host_vertices, 2)) / (eps * eps);
  return static_cast<std::size_t>(std::max(1.0, std::min(std::ceil(chernoff), std::floor(cap))));
}

Graph approx_schur(const Graph& g, const TerminalSet& terminals, double eps,
                   double delta, std::uint64_t seed) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw DomainError("approx_schur: eps must lie in (0, 1/2], got " + std::to_string(eps));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("approx_schur: delta must lie in (0, 1), got " + std::to_string(delta));
  }
  if (terminals.host_vertices() != g.num_vertices()) {
    throw DomainError("terminal set was built for a different host graph");
  }
  if (terminals.size() == 2) {
    const double er = er_exact(g, terminals[0], terminals[1]);
    return Graph(2, {{0, 1, 1.0 / er}});
  }
  const Graph exact = schur_exact(g, terminals);
  // Coarse leverage estimates are compensated by oversampling.
  const double oversample =
      static_cast<std::size_t>(exact.num_vertices()) > kDenseLeverageLimit ? 2.0 : 1.0;
  const std::size_t samples = schur_sample_count(terminals.size(), g.num_vertices(),
                                                 eps, delta, oversample);
  // Sampling cannot sparsify an already small complement.
  if (samples >= exact.num_edges()) return exact;
  const std::uint64_t stream = derive_seed(seed, streams::kSchurSampling);
  std::vector<double> scores = leverage_scores(exact, derive_seed(stream, 0));
  for (int attempt = 1; attempt <= kMaxSamplingAttempts; ++attempt) {
    Graph sparse = sample_edges(exact, scores, samples, derive_seed(stream, attempt));
    if (is_connected(sparse)) return sparse;
  }
  return exact;
}

SpectralRatio spectral_ratio(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw DomainError("spectral_ratio: dimension mismatch (" +
                      std::to_string(a.num_vertices()) + " vs " +
                      std::to_string(b.num_vertices()) + ")");
  }
  return spectral_ratio(dense_laplacian(a), dense_laplacian(b));
}

}  // namespace spantree
