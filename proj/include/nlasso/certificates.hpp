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

// Cluster extraction and numerical optimality certificates.

#ifndef NLASSO_CERTIFICATES_HPP_
#define NLASSO_CERTIFICATES_HPP_

#include <cstddef>
#include <span>

#include "nlasso/objectives.hpp"

namespace nlasso {

inline constexpr double kDefaultThreshold = 0.5;
inline constexpr double kDefaultEpsSat = 1e-6;

struct ClusterResult {
  NodeSet cluster;
  double threshold = kDefaultThreshold;
  bool contains_seeds = false;
};

// {i : x_i > threshold}; strict, so x_i == threshold is left out.
// contains_seeds is only meaningful through the overload taking a problem.
ClusterResult ExtractCluster(std::span<const double> x, double threshold = kDefaultThreshold);
ClusterResult ExtractCluster(const NLassoProblem& p, std::span<const double> x,
                             double threshold = kDefaultThreshold);

// Residuals of the primal-dual optimality conditions at (x, y):
//   -(B^T y)_i = x_i - 1        for seeds
//   -(B^T y)_i = alpha x_i      for the other nodes
//   |y_e| <= lambda W_e
//   x_i = x_j on every edge with |y_e| < lambda W_e (1 - eps_sat)
struct KKTReport {
  double seed_demand_residual = 0.0;
  double nonseed_demand_residual = 0.0;
  bool capacity_ok = true;
  double nonsaturated_jump = 0.0;
  double eps_sat = kDefaultEpsSat;

  double max_residual() const;
};

KKTReport KKTResiduals(const NLassoProblem& p, std::span<const double> x,
                       std::span<const double> y, double eps_sat = kDefaultEpsSat);

// Necessary conditions on a cluster containing the seeds:
//   lambda W(boundary) <= 1 - (alpha/2) sum_{i in C \ S} x_i      (injecting)
//   lambda W(boundary) <= alpha sum_{i not in C} x_i              (absorbing)
struct Prop1Report {
  double boundary_weight = 0.0;
  double lhs = 0.0;
  double rhs_injecting = 0.0;
  double rhs_absorbing = 0.0;
  bool holds_injecting = false;
  bool holds_absorbing = false;
};

// Throws kSeedsOutsideCluster unless every seed is in c.cluster.
Prop1Report Prop1Check(const NLassoProblem& p, const ClusterResult& c,
                       std::span<const double> x);

// lambda W(boundary) <= U alpha / 2, with U bounding the number of nodes
// outside the cluster that carry signal.
bool UBoundCheck(const NLassoProblem& p, const ClusterResult& c, std::size_t u);

}  // namespace nlasso

#endif  // NLASSO_CERTIFICATES_HPP_
