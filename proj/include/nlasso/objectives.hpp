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

// Scalar functionals of the seed-node network Lasso
//
//   minimize  f(x) + g(Bx),
//   f(x) = sum_{i in S} (x_i - 1)^2 / 2 + sum_{i not in S} alpha x_i^2 / 2,
//   g(z) = lambda sum_e W_e |z_e|,
//
// and of its minimum-cost-flow dual on the star-augmented graph.

#ifndef NLASSO_OBJECTIVES_HPP_
#define NLASSO_OBJECTIVES_HPP_

#include <optional>
#include <span>
#include <vector>

#include "nlasso/graph.hpp"

namespace nlasso {

// Flow on directed edges. Base flows have one value per graph edge; augmented
// flows append one value per star edge (i, star), i = 1..n.
struct EdgeFlow {
  std::vector<double> values;
  bool augmented = false;
};

// One nLasso instance: graph, one seed batch and the two tuning parameters.
class NLassoProblem {
 public:
  // Throws kInvalidProblem unless seeds is nonempty, alpha > 0, lambda > 0
  // (all finite), and kInvalidNode if a seed is outside the graph.
  NLassoProblem(Graph graph, NodeSet seeds, double alpha, double lambda);

  const Graph& graph() const { return graph_; }
  const NodeSet& seeds() const { return seeds_; }
  double alpha() const { return alpha_; }
  double lambda() const { return lambda_; }

  bool is_seed(NodeId i) const { return seed_mask_[i - 1] != 0; }
  // lambda * W_e.
  double capacity(EdgeId e) const { return lambda_ * graph_.edge(e).weight; }

 private:
  Graph graph_;
  NodeSet seeds_;
  double alpha_;
  double lambda_;
  std::vector<char> seed_mask_;
};

double TotalVariation(const Graph& g, std::span<const double> x);
double LaplacianQuadratic(const Graph& g, std::span<const double> x);

// f(x) alone, without the TV term.
double Fidelity(const NLassoProblem& p, std::span<const double> x);
// f(x) + lambda * TV(x).
double PrimalObjective(const NLassoProblem& p, std::span<const double> x);

// Minimization form on the augmented graph, evaluated on the star flows only:
//   sum_{i in S} (y_(i,star) - 1)^2 + (1/alpha) sum_{i not in S} y_(i,star)^2.
// Throws kNotAugmented for base flows.
double DualObjective(const NLassoProblem& p, const EdgeFlow& y);

// Lifts a base flow to the augmented graph by routing the net outflow of
// every node into the star: y_(i,star) = -div(y)_i. Conservation then holds
// at every node of the augmented graph, including the star.
EdgeFlow AugmentFlow(const Graph& g, std::span<const double> y);

struct FeasibilityReport {
  // n + 1 entries; the last one is the star node. |outflow - inflow|.
  std::vector<double> conservation_residual;
  // One entry per base edge: max(0, |y_e| - lambda W_e).
  std::vector<double> capacity_violation;
  bool feasible = false;
};

// Star edges carry no capacity. Throws kNotAugmented for base flows.
FeasibilityReport DualFeasibility(const NLassoProblem& p, const EdgeFlow& y, double tol);

// f*(z) = sum_{i in S} (z_i^2/2 + z_i) + sum_{i not in S} z_i^2 / (2 alpha).
double ConjugateF(const NLassoProblem& p, std::span<const double> z);

// g*(y) is 0 when every |y_e| <= lambda W_e (closed constraint) and +inf
// otherwise; this returns whether it is finite.
bool ConjugateGFeasible(const NLassoProblem& p, std::span<const double> y);

// [f(x) + g(Bx)] - [-f*(-B^T y)] for a base flow y. std::nullopt when y
// violates a capacity (the dual value is -inf there).
std::optional<double> DualityGap(const NLassoProblem& p, std::span<const double> x,
                                 std::span<const double> y);

}  // namespace nlasso

#endif  // NLASSO_OBJECTIVES_HPP_
