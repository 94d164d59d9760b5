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

#ifndef SPANTREE_ORACLE_HPP_
#define SPANTREE_ORACLE_HPP_

// Exact, slow ground truth for the numerical solvers.

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spantree/graph.hpp"

namespace spantree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact (weighted) spanning tree count. Integral whenever the weights are.
struct ExactCount {
  Rational value;

  bool is_integer() const;
  BigInt integer() const;  // throws DomainError when not integral
  double log2() const;

  friend bool operator==(const ExactCount&, const ExactCount&) = default;
};

// Exact value of a double (every finite double is a dyadic rational).
Rational to_rational(double x);
double log2_of(const Rational& x);

// Fraction-free (Bareiss) determinant; the matrix is consumed.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

// det of the Laplacian with the rows/columns in `removed` deleted, in exact
// arithmetic. Weights are scaled to integers by the LCM of their
// denominators and the scale is divided back out.
Rational exact_minor_determinant(const Graph& g, std::span<const Vertex> removed);

// Matrix-tree theorem in exact arithmetic. Throws SingularMinorError on a
// disconnected graph.
ExactCount tree_count_exact(const Graph& g);

// er(u,v) = det L_{-{u,v}} / det L_{-v} (two-forest formula), exact.
Rational exact_resistance(const Graph& g, Vertex u, Vertex v);

inline constexpr std::size_t kBruteForceSubsetLimit = 1'000'000;

struct BruteForceResult {
  std::vector<int> subset;  // lexicographically first optimum
  double log_gain = 0.0;    // log2 T(G + S) - log2 T(G)
  Rational base_count;
  Rational best_count;
};

// Number of subsets of size at most k drawn from q items.
std::size_t subsets_up_to(std::size_t q, std::size_t k);

// Exhaustive maximizer of T(G + S) over |S| <= k. Throws
// InstanceTooLargeError when more than kBruteForceSubsetLimit subsets would
// be enumerated.
BruteForceResult brute_force_opt(const Graph& g, const CandidateSet& candidates, int k);

// T(F_n) via a_n = 3 a_{n-1} - a_{n-2}, a_1 = 1, a_2 = 3.
ExactCount fan_count(int n);

struct PathCover {
  std::vector<std::vector<Vertex>> paths;

  std::size_t count() const { return paths.size(); }
  std::vector<int> lengths() const;  // edges per path
  int singleton_count() const;       // paths of length 0
};

inline constexpr int kPathCoverVertexLimit = 14;

// Minimum path cover by subset dynamic programming. Throws
// InstanceTooLargeError above kPathCoverVertexLimit vertices.
PathCover min_path_cover(const Graph& g);

// (1 - 2 eps) log(1 + a) <= log(1 + b) <= (1 + 2 eps) log(1 + a)
bool check_log_approx(double a, double b, double eps);

// Structural situations for an extra edge (u, v) on top of a star S_n plus a
// path cover of its leaves.
enum class InterResCase {
  kInteriorToPath = 1,      // u interior, v on a path with at least one edge
  kInteriorToIsolated = 2,  // u interior, v an isolated vertex of the cover
  kSamePathEnds = 3,        // u, v the two ends of one path
};

struct InterResConfig {
  int n = 0;  // leaves 0..n-1, star center n
  std::vector<std::vector<Vertex>> cover;
  Vertex u = 0;
  Vertex v = 0;
  InterResCase kind = InterResCase::kInteriorToPath;
};

// 7/6, 3/2, and sqrt(5) - 1 (strict) respectively.
double interres_bound(InterResCase kind);

// A canonical configuration of the given case on n >= 6 leaves.
InterResConfig make_interres_config(InterResCase kind, int n);

// er(u, v) in S_n plus the cover; throws DomainError on a malformed
// configuration (cover not a partition of the leaves, (u, v) already a cover
// edge, or the structure disagreeing with `kind`).
double interres_resistance(const InterResConfig& config);
bool check_interres_bounds(const InterResConfig& config);

// Best achievable tree count on S_n + E' at k = n - 1, compared with T(F_n).
struct SoundnessReport {
  int n = 0;
  std::size_t path_cover_number = 0;
  double optimum_log2 = 0.0;
  double fan_log2 = 0.0;
  double ratio = 0.0;  // optimum_log2 / fan_log2
};
SoundnessReport soundness_gap(int n, std::span<const Edge> leaf_edges);

}  // namespace spantree

#endif  // SPANTREE_ORACLE_HPP_
