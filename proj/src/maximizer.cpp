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

#include "spantree/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "spantree/error.hpp"
#include "spantree/random.hpp"
#include "spantree/resistance.hpp"
#include "spantree/schur.hpp"
#include "spantree/spectral.hpp"

namespace spantree {
namespace {

// Dense rank-one tracking is used up to this many vertices; larger graphs
// refactor the sparse Laplacian after every insertion.
constexpr int kDenseTrackerLimit = 3000;
constexpr double kTieTolerance = 1e-12;
constexpr double kMinThreshold = 1e-12;

void check_eps(const char* who, double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw DomainError(std::string(who) + ": eps must lie in (0, 1/2], got " +
                      std::to_string(eps));
  }
}

void check_instance(const char* who, const Graph& g, const CandidateSet& q) {
  q.check_range(g.num_vertices());
  if (!is_connected(g)) {
    throw SingularMinorError(std::string(who) + ": base graph is not connected");
  }
}

// Exact resistances on a graph that grows by edge insertions.
class GrowingGraph {
 public:
  explicit GrowingGraph(const Graph& g) : graph_(g) {
    if (g.num_vertices() <= kDenseTrackerLimit) tracker_.emplace(g);
  }

  double resistance(Vertex u, Vertex v) {
    if (tracker_) return tracker_->resistance(u, v);
    if (!factor_) factor_.emplace(graph_);
    return er_exact(*factor_, u, v);
  }

  void add(const Edge& e) {
    graph_ = graph_.with_edge(e);
    if (tracker_) {
      tracker_->add_edge(e);
    } else {
      factor_.reset();
    }
  }

 private:
  Graph graph_;
  std::optional<ResistanceTracker> tracker_;
  std::optional<LaplacianFactor> factor_;
};

struct Item {
  int candidate;
  Edge edge;  // in the coordinates of the graph it is processed against
};

struct Recursion {
  double th_linear;
  int pass;
  const AddAboveObserver* observer;
};

struct Decision {
  int candidate;
  double estimate;
};

// Returns the decisions that added an edge, in processing order.
void add_above_rec(const Graph& g, std::span<const Item> seq, double eps, int budget,
                   std::uint64_t seed, const Recursion& ctx,
                   std::vector<Decision>& added) {
  if (seq.empty() || budget <= 0) return;
  const double delta =
      1.0 / (10.0 * g.num_vertices() *
             static_cast<double>(g.num_edges() + seq.size()));

  if (seq.size() == 1) {
    const Item& item = seq.front();
    const Graph s = approx_schur(g, TerminalSet({item.edge.u, item.edge.v}, g.num_vertices()),
                                 eps, delta, derive_seed(seed, 0));
    // S is a single edge; b^T S^+ b is its resistance.
    double conductance = 0.0;
    for (const Edge& e : s.edges()) conductance += e.weight;
    const double estimate = 1.0 / conductance;
    const bool take = item.edge.weight * estimate >= ctx.th_linear && budget > 0;
    if (ctx.observer && *ctx.observer) {
      (*ctx.observer)({item.candidate, take, budget, estimate, ctx.th_linear, ctx.pass});
    }
    if (take) added.push_back({item.candidate, estimate});
    return;
  }

  const ErrorSplit split = split_error(eps, seq.size());
  const std::size_t half = seq.size() / 2;

  auto recurse_on = [&](const Graph& host, std::span<const Item> part, int part_budget,
                        std::uint64_t part_seed) {
    std::vector<Vertex> endpoints;
    std::vector<int> local(host.num_vertices(), -1);
    for (const Item& item : part) {
      for (Vertex v : {item.edge.u, item.edge.v}) {
        if (local[v] < 0) {
          local[v] = static_cast<int>(endpoints.size());
          endpoints.push_back(v);
        }
      }
    }
    const Graph s = approx_schur(host, TerminalSet(endpoints, host.num_vertices()),
                                 split.schur_eps, delta, derive_seed(part_seed, 0));
    std::vector<Item> mapped;
    mapped.reserve(part.size());
    for (const Item& item : part) {
      mapped.push_back({item.candidate,
                        {local[item.edge.u], local[item.edge.v], item.edge.weight}});
    }
    const std::size_t before = added.size();
    add_above_rec(s, mapped, split.child_eps, part_budget, derive_seed(part_seed, 1), ctx,
                  added);
    return added.size() - before;
  };

  const std::span<const Item> first = seq.first(half);
  const std::span<const Item> second = seq.subspan(half);
  const std::size_t before = added.size();
  const int got = static_cast<int>(recurse_on(g, first, budget, derive_seed(seed, 1)));

  // Fold the first half's additions (a subsequence of `first`) into the host.
  std::vector<Edge> extra;
  std::size_t cursor = 0;
  for (std::size_t i = before; i < added.size(); ++i) {
    while (first[cursor].candidate != added[i].candidate) ++cursor;
    extra.push_back(first[cursor].edge);
  }
  const Graph updated = extra.empty() ? g : g.with_edges(extra);
  recurse_on(updated, second, budget - got, derive_seed(seed, 2));
}

Selection finish(const Graph& g, const CandidateSet& candidates,
                 std::vector<int> chosen, std::span<const double> estimates,
                 bool exact) {
  Selection out;
  if (exact) {
    const std::vector<double> gains = ledger_gains(g, candidates, chosen);
    for (std::size_t i = 0; i < chosen.size(); ++i) out.append(chosen[i], gains[i]);
  } else {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      out.append(chosen[i], log2_gain(candidates[chosen[i]].weight, estimates[i]));
    }
    out.exact_ledger = false;
  }
  return out;
}

}  // namespace

void Selection::append(int candidate, double log_gain) {
  chosen.push_back(candidate);
  per_step_log_gain.push_back(log_gain);
  total_log_gain += log_gain;
  budget_used = static_cast<int>(chosen.size());
}

ThresholdSchedule::ThresholdSchedule(double th0, double shrink, double stop)
    : th0_(th0), th_(th0), factor_(1.0 - shrink), stop_(stop) {
  if (!(shrink > 0.0 && shrink < 1.0)) {
    throw DomainError("threshold shrink must lie in (0, 1)");
  }
}

ErrorSplit split_error(double eps, std::size_t q) {
  const double levels = std::max(std::log2(static_cast<double>(q)), 2.0);
  return {2.0 / 3.0 * eps / levels, (1.0 - 1.0 / levels) * eps};
}

std::vector<double> ledger_gains(const Graph& g, const CandidateSet& candidates,
                                 std::span<const int> chosen) {
  GrowingGraph growing(g);
  std::vector<double> gains;
  gains.reserve(chosen.size());
  for (int index : chosen) {
    const Edge& e = candidates[index];
    gains.push_back(log2_gain(e.weight, growing.resistance(e.u, e.v)));
    growing.add(e);
  }
  return gains;
}

Selection greedy_exact(const Graph& g, const CandidateSet& candidates, int k) {
  if (candidates.empty()) throw DomainError("greedy_exact: empty candidate set");
  if (k < 1) throw DomainError("greedy_exact: k must be at least 1");
  check_instance("greedy_exact", g, candidates);

  // Lazy evaluation: w * er only decreases as edges are added, so a stale
  // score bounds the fresh one from above.
  struct Entry {
    double bound;
    int index;
    int round;  // round in which `bound` was computed
  };
  const auto lower = [](const Entry& a, const Entry& b) {
    return a.bound < b.bound || (a.bound == b.bound && a.index > b.index);
  };
  GrowingGraph growing(g);
  std::vector<Entry> heap;
  heap.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Edge& e = candidates[i];
    heap.push_back({e.weight * growing.resistance(e.u, e.v), static_cast<int>(i), 0});
  }
  std::make_heap(heap.begin(), heap.end(), lower);

  Selection out;
  const int rounds = std::min<int>(k, static_cast<int>(candidates.size()));
  for (int round = 0; round < rounds; ++round) {
    const auto refresh = [&](Entry& entry) {
      const Edge& e = candidates[entry.index];
      entry.bound = e.weight * growing.resistance(e.u, e.v);
      entry.round = round;
    };
    while (heap.front().round != round) {
      std::pop_heap(heap.begin(), heap.end(), lower);
      refresh(heap.back());
      std::push_heap(heap.begin(), heap.end(), lower);
    }
    const double cutoff = heap.front().bound * (1.0 - kTieTolerance);
    // Near-ties go to the lowest index, so every candidate that might tie is
    // brought up to date first.
    for (Entry& entry : heap) {
      if (entry.round != round && entry.bound >= cutoff) refresh(entry);
    }
    std::make_heap(heap.begin(), heap.end(), lower);
    auto pick = heap.end();
    for (auto it = heap.begin(); it != heap.end(); ++it) {
      if (it->round == round && it->bound >= cutoff && (pick == heap.end() || it->index < pick->index)) {
        pick = it;
      }
    }
    const Entry chosen = *pick;
    *pick = heap.back();
    heap.pop_back();
    std::make_heap(heap.begin(), heap.end(), lower);
    out.append(chosen.index, std::log1p(chosen.bound) / std::numbers::ln2);
    growing.add(candidates[chosen.index]);
  }
  return out;
}

Selection greedy_th(const Graph& g, const CandidateSet& candidates, double eps, int k) {
  check_eps("greedy_th", eps);
  if (candidates.empty()) throw DomainError("greedy_th: empty candidate set");
  if (k < 1) throw DomainError("greedy_th: k must be at least 1");
  check_instance("greedy_th", g, candidates);

  GrowingGraph growing(g);
  double er_max = 0.0;
  for (const Edge& e : candidates.pairs()) {
    er_max = std::max(er_max, e.weight * growing.resistance(e.u, e.v));
  }
  const double q = static_cast<double>(candidates.size());
  ThresholdSchedule schedule(er_max, eps, eps / q * er_max);
  std::vector<char> used(candidates.size(), 0);
  Selection out;
  while (schedule.active() && out.budget_used < k) {
    for (std::size_t i = 0; i < candidates.size() && out.budget_used < k; ++i) {
      if (used[i]) continue;
      const Edge& e = candidates[i];
      const double score = e.weight * growing.resistance(e.u, e.v);
      if (score >= schedule.current()) {
        used[i] = 1;
        out.append(static_cast<int>(i), std::log1p(score) / std::numbers::ln2);
        growing.add(e);
      }
    }
    schedule.advance();
  }
  return out;
}

Selection add_above(const Graph& g, const CandidateSet& sequence, double th_linear,
                    double eps, int k, const SolverOptions& options) {
  check_eps("add_above", eps);
  if (!(th_linear >= 0.0)) throw DomainError("add_above: threshold must be non-negative");
  if (k < 0) throw DomainError("add_above: k must be non-negative");
  check_instance("add_above", g, sequence);

  std::vector<Item> items;
  items.reserve(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    items.push_back({static_cast<int>(i), sequence[i]});
  }
  std::vector<Decision> added;
  const Recursion ctx{th_linear, 0, &options.observer};
  add_above_rec(g, items, eps, k, derive_seed(options.seed, streams::kAddAbove), ctx, added);

  std::vector<int> chosen;
  std::vector<double> estimates;
  for (const Decision& d : added) {
    chosen.push_back(d.candidate);
    estimates.push_back(d.estimate);
  }
  return finish(g, sequence, std::move(chosen), estimates, options.exact_ledger);
}

Selection nstm_maximize(const Graph& g, const CandidateSet& candidates, double eps,
                        int k, const SolverOptions& options) {
  check_eps("nstm_maximize", eps);
  if (candidates.empty()) throw DomainError("nstm_maximize: empty candidate set");
  if (k < 1 || k > static_cast<int>(candidates.size())) {
    throw DomainError("nstm_maximize: k must lie in [1, q], got " + std::to_string(k));
  }
  check_instance("nstm_maximize", g, candidates);

  const std::uint64_t seed = derive_seed(options.seed, streams::kNstm);
  std::vector<VertexPair> pairs;
  pairs.reserve(candidates.size());
  for (const Edge& e : candidates.pairs()) pairs.emplace_back(e.u, e.v);
  const std::vector<ResistanceEstimate> estimates =
      er_est(g, pairs, eps, derive_seed(seed, 0));
  double weighted_max = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    weighted_max = std::max(weighted_max, candidates[i].weight * estimates[i].value);
  }
  const double er_max = (1.0 + eps) / (1.0 - eps) * weighted_max;
  const double th0 = std::log1p(er_max) / std::numbers::ln2;
  if (!(th0 >= kMinThreshold)) {
    Selection empty;
    empty.diagnostic = "initial threshold " + std::to_string(th0) +
                       " below 1e-12; no candidate can make progress";
    return empty;
  }

  const double q = static_cast<double>(candidates.size());
  ThresholdSchedule schedule(th0, eps / 6.0, eps / (2.0 * q) * th0);
  Graph current = g;
  std::vector<char> used(candidates.size(), 0);
  std::vector<int> chosen;
  std::vector<double> chosen_estimates;
  for (int pass = 1; schedule.active(); ++pass, schedule.advance()) {
    const int budget = k - static_cast<int>(chosen.size());
    if (budget <= 0) break;
    std::vector<Item> remaining;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!used[i]) remaining.push_back({static_cast<int>(i), candidates[i]});
    }
    if (remaining.empty()) break;
    const double th_linear = std::expm1(schedule.current() * std::numbers::ln2);
    std::vector<Decision> added;
    const Recursion ctx{th_linear, pass, &options.observer};
    add_above_rec(current, remaining, eps / 12.0, budget,
                  derive_seed(seed, 1, static_cast<std::uint64_t>(pass)), ctx, added);
    if (added.empty()) continue;
    std::vector<Edge> extra;
    for (const Decision& d : added) {
      used[d.candidate] = 1;
      chosen.push_back(d.candidate);
      chosen_estimates.push_back(d.estimate);
      extra.push_back(candidates[d.candidate]);
    }
    current = current.with_edges(extra);
  }
  return finish(g, candidates, std::move(chosen), chosen_estimates, options.exact_ledger);
}

}  // namespace spantree
