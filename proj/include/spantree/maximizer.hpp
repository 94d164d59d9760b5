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

#ifndef SPANTREE_MAXIMIZER_HPP_
#define SPANTREE_MAXIMIZER_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

// Edges picked from a candidate set, in the order they were added, with the
// log2 gain each one contributed at the moment it was added.
struct Selection {
  std::vector<int> chosen;
  std::vector<double> per_step_log_gain;
  double total_log_gain = 0.0;
  int budget_used = 0;
  // False when per-step gains are estimates rather than exact replays.
  bool exact_ledger = true;
  std::string diagnostic;

  void append(int candidate, double log_gain);
};

// Geometric threshold sweep: th0, (1 - shrink) th0, ... while th >= stop.
class ThresholdSchedule {
 public:
  ThresholdSchedule(double th0, double shrink, double stop);

  double initial() const { return th0_; }
  double current() const { return th_; }
  double stop_bound() const { return stop_; }
  double factor() const { return factor_; }
  bool active() const { return th_ >= stop_; }
  void advance() { th_ *= factor_; }

 private:
  double th0_;
  double th_;
  double factor_;
  double stop_;
};

// One leaf decision of the sequential-addition routine.
struct AddAboveEvent {
  int candidate = -1;     // index in the caller's candidate list
  bool added = false;
  int budget_before = 0;  // remaining budget when the edge was processed
  double estimate = 0.0;  // resistance read off the approximate Schur complement
  double th_linear = 0.0;
  int pass = 0;           // threshold pass of nstm_maximize, 0 otherwise
};

using AddAboveObserver = std::function<void(const AddAboveEvent&)>;

struct SolverOptions {
  std::uint64_t seed = 0;
  // Replay the selection with exact resistances to fill the ledger. When
  // off, nstm_maximize reports estimated per-step gains.
  bool exact_ledger = true;
  AddAboveObserver observer;
};

// Classic greedy: k rounds, each adding the candidate maximizing w * er
// (exact), ties to the lowest index.
Selection greedy_exact(const Graph& g, const CandidateSet& candidates, int k);

// Threshold greedy with exact resistances and a (1 - eps) geometric sweep
// from the largest initial w * er down to (eps / q) of it.
Selection greedy_th(const Graph& g, const CandidateSet& candidates, double eps, int k);

// Sequential additions in `sequence` order: an edge is added iff its
// approximate w * er at processing time is at least th_linear and budget
// remains. Divide and conquer over approximate Schur complements. Chosen
// indices refer to positions in `sequence`.
Selection add_above(const Graph& g, const CandidateSet& sequence, double th_linear,
                    double eps, int k, const SolverOptions& options = {});

// Nearly-linear threshold greedy: estimated resistances seed a log-space
// threshold th that shrinks by (1 - eps/6) per pass; each pass runs
// add_above with linear threshold 2^th - 1 and error eps / 12.
Selection nstm_maximize(const Graph& g, const CandidateSet& candidates, double eps,
                        int k, const SolverOptions& options = {});

// Exact per-step gains for adding `chosen` in order.
std::vector<double> ledger_gains(const Graph& g, const CandidateSet& candidates,
                                 std::span<const int> chosen);

// Per-level error split of the divide and conquer: eps1 for the Schur
// approximation, eps2 for the recursive calls. log2 q is clamped below at 2.
struct ErrorSplit {
  double schur_eps;
  double child_eps;
};
ErrorSplit split_error(double eps, std::size_t q);

}  // namespace spantree

#endif  // SPANTREE_MAXIMIZER_HPP_
