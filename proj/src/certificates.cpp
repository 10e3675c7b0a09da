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

#include "nlasso/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "checks.hpp"
#include "nlasso/error.hpp"

namespace nlasso {

using internal::CheckLength;

ClusterResult ExtractCluster(std::span<const double> x, double threshold) {
  std::vector<NodeId> ids;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] > threshold) ids.push_back(static_cast<NodeId>(k + 1));
  }
  ClusterResult out;
  out.cluster = NodeSet(std::move(ids), x.size());
  out.threshold = threshold;
  return out;
}

ClusterResult ExtractCluster(const NLassoProblem& p, std::span<const double> x,
                             double threshold) {
  CheckLength(x.size(), p.graph().node_count(), "node signal");
  ClusterResult out = ExtractCluster(x, threshold);
  out.contains_seeds = p.seeds().is_subset_of(out.cluster);
  return out;
}

double KKTReport::max_residual() const {
  return std::max({seed_demand_residual, nonseed_demand_residual, nonsaturated_jump});
}

KKTReport KKTResiduals(const NLassoProblem& p, std::span<const double> x,
                       std::span<const double> y, double eps_sat) {
  const Graph& g = p.graph();
  CheckLength(x.size(), g.node_count(), "node signal");
  CheckLength(y.size(), g.edge_count(), "edge flow");

  KKTReport r;
  r.eps_sat = eps_sat;
  for (NodeId i = 1; i <= g.node_count(); ++i) {
    const double demand = -DivergenceAt(g, y, i);
    const double xi = x[i - 1];
    if (p.is_seed(i)) {
      r.seed_demand_residual = std::max(r.seed_demand_residual, std::abs(demand - (xi - 1.0)));
    } else {
      r.nonseed_demand_residual =
          std::max(r.nonseed_demand_residual, std::abs(demand - p.alpha() * xi));
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double cap = p.capacity(e);
    const double flow = std::abs(y[e]);
    if (!(flow <= cap)) r.capacity_ok = false;
    if (flow < cap * (1.0 - eps_sat)) {
      const Edge& edge = g.edge(e);
      r.nonsaturated_jump =
          std::max(r.nonsaturated_jump, std::abs(x[edge.tail - 1] - x[edge.head - 1]));
    }
  }
  return r;
}

Prop1Report Prop1Check(const NLassoProblem& p, const ClusterResult& c,
                       std::span<const double> x) {
  const Graph& g = p.graph();
  CheckLength(x.size(), g.node_count(), "node signal");
  if (!p.seeds().is_subset_of(c.cluster)) {
    throw Error(ErrorKind::kSeedsOutsideCluster, "cluster does not contain every seed");
  }

  Prop1Report r;
  r.boundary_weight = BoundaryWeight(g, c.cluster);
  r.lhs = p.lambda() * r.boundary_weight;

  double inside_nonseed = 0.0;
  double outside = 0.0;
  for (NodeId i = 1; i <= g.node_count(); ++i) {
    if (c.cluster.contains(i)) {
      if (!p.is_seed(i)) inside_nonseed += x[i - 1];
    } else {
      outside += x[i - 1];
    }
  }
  r.rhs_injecting = 1.0 - 0.5 * p.alpha() * inside_nonseed;
  r.rhs_absorbing = p.alpha() * outside;
  r.holds_injecting = r.lhs <= r.rhs_injecting;
  r.holds_absorbing = r.lhs <= r.rhs_absorbing;
  return r;
}

bool UBoundCheck(const NLassoProblem& p, const ClusterResult& c, std::size_t u) {
  const double lhs = p.lambda() * BoundaryWeight(p.graph(), c.cluster);
  return lhs <= static_cast<double>(u) * p.alpha() / 2.0;
}

}  // namespace nlasso
