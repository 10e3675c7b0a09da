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

// Spectral baseline: graph Laplacians applied matrix-free and the Fiedler
// vector.

#ifndef NLASSO_BASELINES_HPP_
#define NLASSO_BASELINES_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "nlasso/graph.hpp"

namespace nlasso {

enum class LaplacianMode {
  kUnnormalized,         // L = D - W
  kSymmetricNormalized,  // D^{-1/2} (D - W) D^{-1/2}, D = weighted degrees
};

// Borrows the graph; the graph must outlive the operator.
class Laplacian {
 public:
  // Throws kIsolatedNode in symmetric-normalized mode if a node has zero
  // weighted degree.
  Laplacian(const Graph& g, LaplacianMode mode);

  LaplacianMode mode() const { return mode_; }
  std::size_t size() const { return g_->node_count(); }

  NodeSignal Apply(std::span<const double> x) const;
  void Apply(std::span<const double> x, std::span<double> out) const;

  // Spans the kernel on a connected graph: the constant vector (unnormalized)
  // or sqrt of the weighted degrees (normalized). Not unit length.
  NodeSignal NullVector() const;

  // Upper bound on the largest eigenvalue: 2 max_i d_i, or 2.
  double SpectralBound() const;

 private:
  const Graph* g_;
  LaplacianMode mode_;
  std::vector<double> inv_sqrt_degree_;  // normalized mode only
};

Laplacian MakeLaplacian(const Graph& g, LaplacianMode mode);

struct FiedlerResult {
  NodeSignal vector;  // sup-norm 1, nonnegative at node 1
  double eigenvalue = 0.0;
  std::size_t iterations = 0;
};

// Eigenvector of the smallest non-zero Laplacian eigenvalue, by power
// iteration on (c I - L) with the kernel direction projected out each step.
// Stops when ||L v - mu v|| <= tol ||v||. Throws kDisconnected (or
// kInvalidNode when n < 2) and kNoConvergence.
FiedlerResult ComputeFiedler(const Graph& g, LaplacianMode mode, double tol,
                             std::size_t max_iters);

inline NodeSignal FiedlerVector(const Graph& g, LaplacianMode mode, double tol,
                                std::size_t max_iters) {
  return ComputeFiedler(g, mode, tol, max_iters).vector;
}

struct IndicatorError {
  double l2 = 0.0;
  double linf = 0.0;
};

// Norms of x - 1_C over the nodes 1..x.size(). Throws kDimensionMismatch if c
// holds an id beyond x.size().
IndicatorError IndicatorErrorOf(std::span<const double> x, const NodeSet& c);

}  // namespace nlasso

#endif  // NLASSO_BASELINES_HPP_
