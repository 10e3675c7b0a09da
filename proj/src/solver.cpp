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

#include "nlasso/solver.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "checks.hpp"
#include "nlasso/certificates.hpp"
#include "nlasso/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlasso {

using internal::CheckLength;

namespace {

// Below this many elements a pass runs on the calling thread; spawning a team
// costs more than the work.
constexpr std::int64_t kParallelGrain = 4096;

int ResolveWorkers(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

void CheckState(const NLassoProblem& p, const SolverState& s) {
  const Graph& g = p.graph();
  CheckLength(s.x_curr.size(), g.node_count(), "x_curr");
  CheckLength(s.x_prev.size(), g.node_count(), "x_prev");
  CheckLength(s.y.size(), g.edge_count(), "y");
}

}  // namespace

SolverConfig::SolverConfig(std::size_t max_iters) : max_iters_(max_iters) {
  if (max_iters_ == 0) throw Error(ErrorKind::kInvalidConfig, "max_iters must be >= 1");
}

SolverConfig& SolverConfig::set_gap_stop(std::size_t interval, double tolerance) {
  if (!(tolerance >= 0.0)) throw Error(ErrorKind::kInvalidConfig, "gap tolerance must be >= 0");
  gap_check_interval_ = interval;
  gap_tolerance_ = tolerance;
  return *this;
}

SolverConfig& SolverConfig::set_record_interval(std::size_t interval) {
  record_interval_ = interval;
  return *this;
}

SolverConfig& SolverConfig::set_workers(int workers) {
  if (workers < 0) throw Error(ErrorKind::kInvalidConfig, "workers must be >= 0");
  workers_ = workers;
  return *this;
}

SolverState InitState(const NLassoProblem& p) {
  const Graph& g = p.graph();
  for (NodeId i = 1; i <= g.node_count(); ++i) {
    if (g.degree(i) == 0) {
      throw Error(ErrorKind::kIsolatedNode, "node " + std::to_string(i) + " has no edges");
    }
  }
  SolverState s;
  s.x_curr.assign(g.node_count(), 0.0);
  s.x_prev.assign(g.node_count(), 0.0);
  s.y.assign(g.edge_count(), 0.0);
  return s;
}

void StepInPlace(const NLassoProblem& p, SolverState& s, int workers) {
  CheckState(p, s);
  const Graph& g = p.graph();
  const auto edges = g.edges();
  const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
  const std::int64_t n = static_cast<std::int64_t>(g.node_count());
  const double lambda = p.lambda();
  const double alpha = p.alpha();
  const int threads = ResolveWorkers(workers);
  double* y = s.y.data();
  double* x = s.x_curr.data();
  double* x_prev = s.x_prev.data();

  // Edge pass: extrapolation, dual ascent with step 1/2, capacity projection.
  // The projection clamps to +-lambda W_e, which equals the scaling
  // y / max(1, |y| / (lambda W_e)) but keeps |y_e| <= lambda W_e exact in
  // floating point.
#pragma omp parallel for schedule(static) num_threads(threads) if (m >= kParallelGrain)
  for (std::int64_t e = 0; e < m; ++e) {
    const Edge& edge = edges[static_cast<std::size_t>(e)];
    const double xt_i = 2.0 * x[edge.tail - 1] - x_prev[edge.tail - 1];
    const double xt_j = 2.0 * x[edge.head - 1] - x_prev[edge.head - 1];
    const double v = y[e] + 0.5 * (xt_i - xt_j);
    const double cap = lambda * edge.weight;
    y[e] = std::abs(v) > cap ? std::copysign(cap, v) : v;
  }

  // Node pass: primal descent with gamma_i = 1/deg(i), then the proximal map
  // of the seed or non-seed fidelity term.
  const std::span<const double> flow(s.y);
#pragma omp parallel for schedule(static) num_threads(threads) if (n >= kParallelGrain)
  for (std::int64_t k = 0; k < n; ++k) {
    const NodeId i = static_cast<NodeId>(k + 1);
    const double gamma = 1.0 / static_cast<double>(g.degree(i));
    const double v = x[k] - gamma * DivergenceAt(g, flow, i);
    const double next = p.is_seed(i) ? (gamma + v) / (gamma + 1.0) : v / (alpha * gamma + 1.0);
    x_prev[k] = x[k];
    x[k] = next;
  }
  ++s.r;
}

SolverState Step(const NLassoProblem& p, const SolverState& s, int workers) {
  SolverState next = s;
  StepInPlace(p, next, workers);
  return next;
}

SolverResult Run(const NLassoProblem& p, const SolverConfig& cfg) {
  SolverState s = InitState(p);
  SolverResult result;

  const bool gap_stop = cfg.gap_check_interval() > 0 && cfg.gap_tolerance() > 0.0;
  while (s.r < cfg.max_iters()) {
    StepInPlace(p, s, cfg.workers());

    const bool record = cfg.record_interval() > 0 && s.r % cfg.record_interval() == 0;
    const bool check = gap_stop && s.r % cfg.gap_check_interval() == 0;
    if (!record && !check) continue;

    // y is capacity-feasible after every step, so the gap is always finite.
    const double gap = DualityGap(p, s.x_curr, s.y).value();
    if (record) {
      result.history.push_back({s.r, PrimalObjective(p, s.x_curr), gap,
                                KKTResiduals(p, s.x_curr, s.y).max_residual()});
    }
    if (check && gap <= cfg.gap_tolerance()) break;
  }

  result.x = std::move(s.x_curr);
  result.y = std::move(s.y);
  result.iters_run = s.r;
  return result;
}

}  // namespace nlasso
