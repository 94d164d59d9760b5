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

#include "spantree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "spantree/error.hpp"
#include "spantree/instances.hpp"
#include "spantree/resistance.hpp"

namespace spantree {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::msb;
using boost::multiprecision::numerator;

// log2 of a positive big integer without overflowing a double.
double log2_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned top = msb(x);
  if (top < 1000) return std::log2(x.convert_to<double>());
  const unsigned shift = top - 60;
  const BigInt head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

// Integer Laplacian scaled by 2^scale_bits, where every weight is an integer
// multiple of 2^-scale_bits.
struct ScaledLaplacian {
  std::vector<std::vector<BigInt>> matrix;
  unsigned scale_bits = 0;
};

ScaledLaplacian scaled_laplacian(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Rational> weights;
  weights.reserve(g.num_edges());
  unsigned scale_bits = 0;
  for (const Edge& e : g.edges()) {
    weights.push_back(to_rational(e.weight));
    const BigInt den = denominator(weights.back());
    // Denominators of doubles are powers of two, so the LCM is the largest.
    scale_bits = std::max(scale_bits, static_cast<unsigned>(msb(den)));
  }
  ScaledLaplacian out;
  out.scale_bits = scale_bits;
  out.matrix.assign(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    const Rational scaled = weights[i] * Rational(BigInt(1) << scale_bits);
    const BigInt w = numerator(scaled);
    out.matrix[e.u][e.v] -= w;
    out.matrix[e.v][e.u] -= w;
    out.matrix[e.u][e.u] += w;
    out.matrix[e.v][e.v] += w;
  }
  return out;
}

std::vector<std::vector<BigInt>> drop(const std::vector<std::vector<BigInt>>& m,
                                      std::span<const Vertex> removed) {
  const int n = static_cast<int>(m.size());
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= n) throw DomainError("removed vertex out of range");
    gone[v] = 1;
  }
  std::vector<std::vector<BigInt>> out;
  for (int i = 0; i < n; ++i) {
    if (gone[i]) continue;
    std::vector<BigInt> row;
    for (int j = 0; j < n; ++j) {
      if (!gone[j]) row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Rational minor_determinant(const ScaledLaplacian& lap, std::span<const Vertex> removed) {
  std::vector<std::vector<BigInt>> m = drop(lap.matrix, removed);
  const std::size_t dim = m.size();
  const BigInt det = bareiss_determinant(std::move(m));
  return Rational(det) / Rational(BigInt(1) << (lap.scale_bits * dim));
}

// Binomial coefficient saturating at `cap`.
std::size_t choose_capped(std::size_t q, std::size_t j, std::size_t cap) {
  long double value = 1.0L;
  for (std::size_t i = 1; i <= j; ++i) {
    value = value * static_cast<long double>(q - j + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(std::llround(value));
}

bool next_combination(std::vector<int>& combo, int q) {
  const int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[i] < q - k + i) {
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool adjacent(const std::vector<std::uint32_t>& nbr, int a, int b) {
  return (nbr[a] >> b) & 1u;
}

}  // namespace

bool ExactCount::is_integer() const { return denominator(value) == 1; }

BigInt ExactCount::integer() const {
  if (!is_integer()) throw DomainError("tree count is not an integer");
  return numerator(value);
}

double ExactCount::log2() const { return log2_of(value); }

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("to_rational: non-finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational out(scaled);
  if (exponent > 0) {
    out *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    out /= Rational(BigInt(1) << (-exponent));
  }
  return out;
}

double log2_of(const Rational& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  return log2_big(numerator(x)) - log2_big(denominator(x));
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("bareiss_determinant: matrix is not square");
  }
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return BigInt(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational exact_minor_determinant(const Graph& g, std::span<const Vertex> removed) {
  return minor_determinant(scaled_laplacian(g), removed);
}

ExactCount tree_count_exact(const Graph& g) {
  if (g.num_vertices() < 1 || !is_connected(g)) {
    throw SingularMinorError("tree_count_exact: graph is not connected");
  }
  const Vertex grounded = g.num_vertices() - 1;
  return {exact_minor_determinant(g, std::span<const Vertex>(&grounded, 1))};
}

Rational exact_resistance(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw DomainError("exact_resistance: u == v");
  const ScaledLaplacian lap = scaled_laplacian(g);
  const Vertex both[2] = {u, v};
  const Rational trees = minor_determinant(lap, std::span<const Vertex>(&v, 1));
  if (trees == 0) throw SingularMinorError("exact_resistance: graph is not connected");
  return minor_determinant(lap, both) / trees;
}

std::size_t subsets_up_to(std::size_t q, std::size_t k) {
  std::size_t total = 0;
  const std::size_t cap = std::numeric_limits<std::size_t>::max() / 4;
  for (std::size_t j = 0; j <= std::min(q, k); ++j) {
    total += choose_capped(q, j, cap);
    if (total > cap) return cap;
  }
  return total;
}

BruteForceResult brute_force_opt(const Graph& g, const CandidateSet& candidates, int k) {
  if (k < 0) throw DomainError("brute_force_opt: k must be non-negative");
  candidates.check_range(g.num_vertices());
  const std::size_t q = candidates.size();
  const std::size_t enumerated = subsets_up_to(q, static_cast<std::size_t>(k));
  if (enumerated > kBruteForceSubsetLimit) {
    throw InstanceTooLargeError("brute_force_opt: " + std::to_string(enumerated) +
                                " subsets exceed the enumeration guard of " +
                                std::to_string(kBruteForceSubsetLimit));
  }
  BruteForceResult out;
  out.base_count = tree_count_exact(g).value;
  out.best_count = out.base_count;

  // T(G + S) is strictly increasing in S, so an optimum uses min(k, q) edges.
  const int size = static_cast<int>(std::min<std::size_t>(q, static_cast<std::size_t>(k)));
  if (size > 0) {
    std::vector<Edge> all(g.edges().begin(), g.edges().end());
    const Graph with_all = g.with_edges(candidates.pairs());
    const ScaledLaplacian scaled = scaled_laplacian(with_all);
    // Scale of the candidate-free base in the same units.
    const BigInt unit = BigInt(1) << scaled.scale_bits;
    ScaledLaplacian base = scaled;
    std::vector<BigInt> cand_w(q);
    for (std::size_t c = 0; c < q; ++c) {
      const Edge& e = candidates[c];
      cand_w[c] = numerator(to_rational(e.weight) * Rational(unit));
      base.matrix[e.u][e.v] += cand_w[c];
      base.matrix[e.v][e.u] += cand_w[c];
      base.matrix[e.u][e.u] -= cand_w[c];
      base.matrix[e.v][e.v] -= cand_w[c];
    }
    const Vertex grounded = g.num_vertices() - 1;
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    bool first = true;
    do {
      ScaledLaplacian trial = base;
      for (int c : combo) {
        const Edge& e = candidates[c];
        trial.matrix[e.u][e.v] -= cand_w[c];
        trial.matrix[e.v][e.u] -= cand_w[c];
        trial.matrix[e.u][e.u] += cand_w[c];
        trial.matrix[e.v][e.v] += cand_w[c];
      }
      const Rational count =
          minor_determinant(trial, std::span<const Vertex>(&grounded, 1));
      if (first || count > out.best_count) {
        out.best_count = count;
        out.subset = combo;
        first = false;
      }
    } while (next_combination(combo, static_cast<int>(q)));
  }
  out.log_gain = log2_of(out.best_count / out.base_count);
  return out;
}

ExactCount fan_count(int n) {
  if (n < 1) throw DomainError("fan_count: need n >= 1");
  BigInt prev = 1;  // a_1
  BigInt cur = 3;   // a_2
  if (n == 1) return {Rational(prev)};
  for (int i = 3; i <= n; ++i) {
    BigInt next = 3 * cur - prev;
    prev = cur;
    cur = next;
  }
  return {Rational(cur)};
}

std::vector<int> PathCover::lengths() const {
  std::vector<int> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(static_cast<int>(p.size()) - 1);
  return out;
}

int PathCover::singleton_count() const {
  return static_cast<int>(std::count_if(paths.begin(), paths.end(),
                                        [](const auto& p) { return p.size() == 1; }));
}

PathCover min_path_cover(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kPathCoverVertexLimit) {
    throw InstanceTooLargeError("min_path_cover: " + std::to_string(n) +
                                " vertices exceed the guard of " +
                                std::to_string(kPathCoverVertexLimit));
  }
  PathCover cover;
  if (n == 0) return cover;
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = (1u << n) - 1;
  // ends[mask]: vertices at which some simple path spanning exactly mask ends.
  std::vector<std::uint32_t> ends(full + 1, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (std::uint32_t rest = ends[mask]; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      for (std::uint32_t out = nbr[v] & ~mask; out != 0; out &= out - 1) {
        const int u = std::countr_zero(out);
        ends[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  // best[mask]: fewest paths covering mask; piece[mask]: the path holding
  // mask's lowest vertex in one optimal cover.
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> best(full + 1, kUnset);
  std::vector<std::uint32_t> piece(full + 1, 0);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t others = mask ^ low;
    // Enumerate sub = low | s for every s subset of others.
    for (std::uint32_t s = others;; s = (s - 1) & others) {
      const std::uint32_t sub = low | s;
      if (ends[sub] != 0 && best[mask ^ sub] != kUnset &&
          best[mask ^ sub] + 1 < best[mask]) {
        best[mask] = best[mask ^ sub] + 1;
        piece[mask] = sub;
      }
      if (s == 0) break;
    }
  }
  for (std::uint32_t mask = full; mask != 0; mask ^= piece[mask]) {
    std::uint32_t sub = piece[mask];
    std::vector<Vertex> path;
    int v = std::countr_zero(ends[sub]);
    path.push_back(v);
    while (sub != (1u << v)) {
      const std::uint32_t prev_mask = sub ^ (1u << v);
      int u = -1;
      for (std::uint32_t cand = ends[prev_mask]; cand != 0; cand &= cand - 1) {
        const int w = std::countr_zero(cand);
        if (adjacent(nbr, w, v)) {
          u = w;
          break;
        }
      }
      sub = prev_mask;
      v = u;
      path.push_back(v);
    }
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

bool check_log_approx(double a, double b, double eps) {
  const double la = std::log1p(a);
  const double lb = std::log1p(b);
  return (1.0 - 2.0 * eps) * la <= lb && lb <= (1.0 + 2.0 * eps) * la;
}

double interres_bound(InterResCase kind) {
  switch (kind) {
    case InterResCase::kInteriorToPath:
      return 7.0 / 6.0;
    case InterResCase::kInteriorToIsolated:
      return 1.5;
    case InterResCase::kSamePathEnds:
      return std::sqrt(5.0) - 1.0;
  }
  throw DomainError("unknown resistance case");
}

InterResConfig make_interres_config(InterResCase kind, int n) {
  if (n < 6) throw DomainError("make_interres_config: need n >= 6");
  InterResConfig config;
  config.n = n;
  config.kind = kind;
  auto run = [](int from, int to) {
    std::vector<Vertex> path;
    for (int i = from; i < to; ++i) path.push_back(i);
    return path;
  };
  switch (kind) {
    case InterResCase::kInteriorToPath: {
      const int split = (n + 1) / 2;
      config.cover = {run(0, split), run(split, n)};
      config.u = 1;
      config.v = n - 1;
      break;
    }
    case InterResCase::kInteriorToIsolated:
      config.cover = {run(0, n - 1), run(n - 1, n)};
      config.u = 1;
      config.v = n - 1;
      break;
    case InterResCase::kSamePathEnds:
      config.cover = {run(0, n)};
      config.u = 0;
      config.v = n - 1;
      break;
  }
  return config;
}

double interres_resistance(const InterResConfig& config) {
  const int n = config.n;
  if (n < 2) throw DomainError("interres: need at least two leaves");
  std::vector<int> path_of(n, -1);
  std::vector<int> position(n, -1);
  for (std::size_t p = 0; p < config.cover.size(); ++p) {
    const auto& path = config.cover[p];
    if (path.empty()) throw DomainError("interres: empty path in cover");
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex x = path[i];
      if (x < 0 || x >= n) throw DomainError("interres: cover vertex outside the leaves");
      if (path_of[x] != -1) throw DomainError("interres: cover paths overlap");
      path_of[x] = static_cast<int>(p);
      position[x] = static_cast<int>(i);
    }
  }
  if (std::count(path_of.begin(), path_of.end(), -1) != 0) {
    throw DomainError("interres: cover misses a leaf");
  }
  const Vertex u = config.u;
  const Vertex v = config.v;
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
    throw DomainError("interres: extra edge must join two distinct leaves");
  }
  if (path_of[u] == path_of[v] && std::abs(position[u] - position[v]) == 1) {
    throw DomainError("interres: extra edge is already a cover edge");
  }
  const auto path_size = [&](Vertex x) { return config.cover[path_of[x]].size(); };
  const auto is_end = [&](Vertex x) {
    return position[x] == 0 || position[x] + 1 == static_cast<int>(path_size(x));
  };
  bool matches = false;
  switch (config.kind) {
    case InterResCase::kInteriorToPath:
      matches = !is_end(u) && path_size(v) >= 2;
      break;
    case InterResCase::kInteriorToIsolated:
      matches = !is_end(u) && path_size(v) == 1;
      break;
    case InterResCase::kSamePathEnds:
      matches = path_of[u] == path_of[v] && path_size(u) >= 3 && is_end(u) && is_end(v);
      break;
  }
  if (!matches) throw DomainError("interres: configuration does not match its case");

  std::vector<Edge> extra;
  for (const auto& path : config.cover) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      extra.push_back({path[i], path[i + 1], 1.0});
    }
  }
  return er_exact(gen_star(n).with_edges(extra), u, v);
}

bool check_interres_bounds(const InterResConfig& config) {
  const double er = interres_resistance(config);
  const double bound = interres_bound(config.kind);
  return config.kind == InterResCase::kSamePathEnds ? er < bound : er <= bound;
}

SoundnessReport soundness_gap(int n, std::span<const Edge> leaf_edges) {
  std::vector<VertexPair> pairs;
  for (const Edge& e : leaf_edges) pairs.emplace_back(e.u, e.v);
  const InstanceSpec spec = gen_star_plus(n, pairs);
  const BruteForceResult best = brute_force_opt(spec.base, spec.candidates, n - 1);
  SoundnessReport report;
  report.n = n;
  report.path_cover_number = min_path_cover(Graph(n, {leaf_edges.begin(), leaf_edges.end()})).count();
  report.optimum_log2 = log2_of(best.best_count);
  report.fan_log2 = fan_count(n).log2();
  report.ratio = report.optimum_log2 / report.fan_log2;
  return report;
}

}  // namespace spantree
