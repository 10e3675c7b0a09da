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

#include "nlasso/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "checks.hpp"
#include "nlasso/error.hpp"

namespace nlasso {

using internal::CheckLength;

namespace {

bool PositiveFinite(double v) { return v > 0.0 && std::isfinite(v); }

void CheckAugmented(const NLassoProblem& p, const EdgeFlow& y) {
  const Graph& g = p.graph();
  if (!y.augmented) throw Error(ErrorKind::kNotAugmented, "expected an augmented flow");
  CheckLength(y.values.size(), g.edge_count() + g.node_count(), "augmented flow");
}

}  // namespace

NLassoProblem::NLassoProblem(Graph graph, NodeSet seeds, double alpha, double lambda)
    : graph_(std::move(graph)), seeds_(std::move(seeds)), alpha_(alpha), lambda_(lambda) {
  if (seeds_.empty()) throw Error(ErrorKind::kInvalidProblem, "seed set is empty");
  if (!PositiveFinite(alpha_)) throw Error(ErrorKind::kInvalidProblem, "alpha must be > 0");
  if (!PositiveFinite(lambda_)) throw Error(ErrorKind::kInvalidProblem, "lambda must be > 0");
  if (seeds_.ids().back() > graph_.node_count()) {
    throw Error(ErrorKind::kInvalidNode,
                "seed " + std::to_string(seeds_.ids().back()) + " outside the graph");
  }
  seed_mask_ = seeds_.mask(graph_.node_count());
}

double TotalVariation(const Graph& g, std::span<const double> x) {
  CheckLength(x.size(), g.node_count(), "node signal");
  double tv = 0.0;
  for (const Edge& e : g.edges()) tv += e.weight * std::abs(x[e.tail - 1] - x[e.head - 1]);
  return tv;
}

double LaplacianQuadratic(const Graph& g, std::span<const double> x) {
  CheckLength(x.size(), g.node_count(), "node signal");
  double q = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = x[e.tail - 1] - x[e.head - 1];
    q += e.weight * d * d;
  }
  return q;
}

double Fidelity(const NLassoProblem& p, std::span<const double> x) {
  CheckLength(x.size(), p.graph().node_count(), "node signal");
  double seed_part = 0.0;
  double rest = 0.0;
  for (NodeId i = 1; i <= x.size(); ++i) {
    const double v = x[i - 1];
    if (p.is_seed(i)) {
      seed_part += (v - 1.0) * (v - 1.0);
    } else {
      rest += v * v;
    }
  }
  return 0.5 * seed_part + 0.5 * p.alpha() * rest;
}

double PrimalObjective(const NLassoProblem& p, std::span<const double> x) {
  return Fidelity(p, x) + p.lambda() * TotalVariation(p.graph(), x);
}

double DualObjective(const NLassoProblem& p, const EdgeFlow& y) {
  CheckAugmented(p, y);
  const Graph& g = p.graph();
  double seed_part = 0.0;
  double rest = 0.0;
  for (NodeId i = 1; i <= g.node_count(); ++i) {
    const double s = y.values[g.edge_count() + i - 1];
    if (p.is_seed(i)) {
      seed_part += (s - 1.0) * (s - 1.0);
    } else {
      rest += s * s;
    }
  }
  return seed_part + rest / p.alpha();
}

EdgeFlow AugmentFlow(const Graph& g, std::span<const double> y) {
  CheckLength(y.size(), g.edge_count(), "edge flow");
  EdgeFlow out;
  out.augmented = true;
  out.values.assign(y.begin(), y.end());
  out.values.reserve(g.edge_count() + g.node_count());
  for (NodeId i = 1; i <= g.node_count(); ++i) out.values.push_back(-DivergenceAt(g, y, i));
  return out;
}

FeasibilityReport DualFeasibility(const NLassoProblem& p, const EdgeFlow& y, double tol) {
  CheckAugmented(p, y);
  const Graph& g = p.graph();
  const std::span<const double> base(y.values.data(), g.edge_count());

  FeasibilityReport report;
  report.conservation_residual.resize(g.node_count() + 1);
  double star_inflow = 0.0;
  for (NodeId i = 1; i <= g.node_count(); ++i) {
    const double star = y.values[g.edge_count() + i - 1];
    report.conservation_residual[i - 1] = std::abs(DivergenceAt(g, base, i) + star);
    star_inflow += star;
  }
  report.conservation_residual[g.node_count()] = std::abs(star_inflow);

  report.capacity_violation.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    report.capacity_violation[e] = std::max(0.0, std::abs(base[e]) - p.capacity(e));
  }

  auto within = [tol](double r) { return r <= tol; };
  report.feasible = std::all_of(report.conservation_residual.begin(),
                                report.conservation_residual.end(), within) &&
                    std::all_of(report.capacity_violation.begin(),
                                report.capacity_violation.end(), within);
  return report;
}

double ConjugateF(const NLassoProblem& p, std::span<const double> z) {
  CheckLength(z.size(), p.graph().node_count(), "node signal");
  double seed_part = 0.0;
  double rest = 0.0;
  for (NodeId i = 1; i <= z.size(); ++i) {
    const double v = z[i - 1];
    if (p.is_seed(i)) {
      seed_part += 0.5 * v * v + v;
    } else {
      rest += v * v;
    }
  }
  return seed_part + rest / (2.0 * p.alpha());
}

bool ConjugateGFeasible(const NLassoProblem& p, std::span<const double> y) {
  CheckLength(y.size(), p.graph().edge_count(), "edge flow");
  for (EdgeId e = 0; e < y.size(); ++e) {
    if (!(std::abs(y[e]) <= p.capacity(e))) return false;
  }
  return true;
}

std::optional<double> DualityGap(const NLassoProblem& p, std::span<const double> x,
                                 std::span<const double> y) {
  CheckLength(x.size(), p.graph().node_count(), "node signal");
  if (!ConjugateGFeasible(p, y)) return std::nullopt;
  NodeSignal z = Divergence(p.graph(), y);
  for (double& v : z) v = -v;
  return PrimalObjective(p, x) + ConjugateF(p, z);
}

}  // namespace nlasso
