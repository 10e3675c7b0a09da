// Copyright 2026 The nlasso Authors.
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

// Primal-dual message passing for the seed-node network Lasso.
//
// One iteration, with gamma_i = 1 / deg(i):
//
//   xt_i  = 2 x_i - x_prev_i                                  (extrapolate)
//   y_e  += (xt_i - xt_j) / 2,   e = (i, j)                   (dual ascent)
//   y_e   = y_e / max(1, |y_e| / (lambda W_e))                (capacity)
//   v_i   = x_i - gamma_i (B^T y)_i                           (primal descent)
//   x_i   = (gamma_i + v_i) / (gamma_i + 1)      for seeds
//   x_i   = v_i / (alpha gamma_i + 1)            otherwise
//
// The three edge stages run as a single pass over edges and the three node
// stages as a single pass over nodes. Inside a pass every element is
// independent, so the pass is split across OpenMP workers; results are
// bitwise identical for any worker count.

#ifndef NLASSO_SOLVER_HPP_
#define NLASSO_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "nlasso/objectives.hpp"

namespace nlasso {

class SolverConfig {
 public:
  // Throws kInvalidConfig when max_iters == 0.
  explicit SolverConfig(std::size_t max_iters = 1000);

  std::size_t max_iters() const { return max_iters_; }
  std::size_t gap_check_interval() const { return gap_check_interval_; }
  double gap_tolerance() const { return gap_tolerance_; }
  std::size_t record_interval() const { return record_interval_; }
  int workers() const { return workers_; }

  // Stop early once the duality gap drops to `tolerance`, checked every
  // `interval` iterations. interval == 0 or tolerance == 0 disables it.
  SolverConfig& set_gap_stop(std::size_t interval, double tolerance);
  // Append a history record every `interval` iterations (0 = never).
  SolverConfig& set_record_interval(std::size_t interval);
  // OpenMP thread count; 0 uses the runtime default.
  SolverConfig& set_workers(int workers);

 private:
  std::size_t max_iters_;
  std::size_t gap_check_interval_ = 0;
  double gap_tolerance_ = 0.0;
  std::size_t record_interval_ = 0;
  int workers_ = 0;
};

struct SolverState {
  NodeSignal x_curr;
  NodeSignal x_prev;
  std::vector<double> y;  // base-edge flow
  std::size_t r = 0;
};

struct HistoryRecord {
  std::size_t r;
  double primal;
  double gap;
  double max_kkt_residual;

  friend bool operator==(const HistoryRecord&, const HistoryRecord&) = default;
};

struct SolverResult {
  NodeSignal x;
  std::vector<double> y;
  std::size_t iters_run = 0;
  std::vector<HistoryRecord> history;
};

// Zero primal and dual iterates. Throws kIsolatedNode if some node has no
// edges (its step size 1/deg would be undefined).
SolverState InitState(const NLassoProblem& p);

// One full iteration; returns the successor state.
SolverState Step(const NLassoProblem& p, const SolverState& s, int workers = 1);

// In-place variant used by Run().
void StepInPlace(const NLassoProblem& p, SolverState& s, int workers = 1);

SolverResult Run(const NLassoProblem& p, const SolverConfig& cfg);

}  // namespace nlasso

#endif  // NLASSO_SOLVER_HPP_
