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

#include "nlasso/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "checks.hpp"
#include "nlasso/error.hpp"

namespace nlasso {

using internal::CheckLength;

namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void Normalize(std::span<double> v) {
  const double norm = std::sqrt(Dot(v, v));
  for (double& a : v) a /= norm;
}

// v -= (<v,u> / <u,u>) u
void Deflate(std::span<double> v, std::span<const double> u, double uu) {
  const double c = Dot(v, u) / uu;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * u[k];
}

}  // namespace

Laplacian::Laplacian(const Graph& g, LaplacianMode mode) : g_(&g), mode_(mode) {
  if (mode_ == LaplacianMode::kSymmetricNormalized) {
    inv_sqrt_degree_.resize(g.node_count());
    for (NodeId i = 1; i <= g.node_count(); ++i) {
      const double d = g.weighted_degree(i);
      if (!(d > 0.0)) {
        throw Error(ErrorKind::kIsolatedNode,
                    "node " + std::to_string(i) + " has zero weighted degree");
      }
      inv_sqrt_degree_[i - 1] = 1.0 / std::sqrt(d);
    }
  }
}

Laplacian MakeLaplacian(const Graph& g, LaplacianMode mode) { return Laplacian(g, mode); }

void Laplacian::Apply(std::span<const double> x, std::span<double> out) const {
  CheckLength(x.size(), size(), "node signal");
  CheckLength(out.size(), size(), "output signal");
  const bool normalized = mode_ == LaplacianMode::kSymmetricNormalized;
  for (NodeId i = 1; i <= size(); ++i) {
    const double xi = normalized ? x[i - 1] * inv_sqrt_degree_[i - 1] : x[i - 1];
    double acc = 0.0;
    for (auto list : {g_->in_neighbors(i), g_->out_neighbors(i)}) {
      for (const Incidence& a : list) {
        const double xj =
            normalized ? x[a.neighbor - 1] * inv_sqrt_degree_[a.neighbor - 1] : x[a.neighbor - 1];
        acc += g_->edge(a.edge).weight * (xi - xj);
      }
    }
    out[i - 1] = normalized ? acc * inv_sqrt_degree_[i - 1] : acc;
  }
}

NodeSignal Laplacian::Apply(std::span<const double> x) const {
  NodeSignal out(size());
  Apply(x, out);
  return out;
}

NodeSignal Laplacian::NullVector() const {
  NodeSignal u(size(), 1.0);
  if (mode_ == LaplacianMode::kSymmetricNormalized) {
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = 1.0 / inv_sqrt_degree_[k];
  }
  return u;
}

double Laplacian::SpectralBound() const {
  if (mode_ == LaplacianMode::kSymmetricNormalized) return 2.0;
  double d_max = 0.0;
  for (NodeId i = 1; i <= size(); ++i) d_max = std::max(d_max, g_->weighted_degree(i));
  return 2.0 * d_max;
}

FiedlerResult ComputeFiedler(const Graph& g, LaplacianMode mode, double tol,
                             std::size_t max_iters) {
  const std::size_t n = g.node_count();
  if (n < 2) throw Error(ErrorKind::kInvalidNode, "Fiedler vector needs at least two nodes");
  if (!g.is_connected()) throw Error(ErrorKind::kDisconnected, "graph is not connected");

  const Laplacian lap(g, mode);
  const NodeSignal u = lap.NullVector();
  const double uu = Dot(u, u);
  const double shift = lap.SpectralBound();

  // Alternating +-1 with a small ramp added: the pure alternating pattern is
  // orthogonal to the Fiedler vector of odd-length paths.
  NodeSignal v(n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = (k % 2 == 0 ? 1.0 : -1.0) + (static_cast<double>(k) + 1.0) / static_cast<double>(n);
  }
  Deflate(v, u, uu);
  Normalize(v);

  NodeSignal lv(n);
  FiedlerResult result;
  for (std::size_t it = 1; it <= max_iters; ++it) {
    lap.Apply(v, lv);
    const double mu = Dot(v, lv);
    double res2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double r = lv[k] - mu * v[k];
      res2 += r * r;
    }
    if (std::sqrt(res2) <= tol) {
      result.eigenvalue = mu;
      result.iterations = it;
      break;
    }
    if (it == max_iters) {
      throw Error(ErrorKind::kNoConvergence,
                  "eigen-residual " + std::to_string(std::sqrt(res2)) + " after " +
                      std::to_string(max_iters) + " iterations");
    }
    for (std::size_t k = 0; k < n; ++k) v[k] = shift * v[k] - lv[k];
    Deflate(v, u, uu);
    Normalize(v);
  }

  // Sign: nonnegative at node 1; scale to sup-norm 1.
  double peak = 0.0;
  for (double a : v) peak = std::max(peak, std::abs(a));
  const double sign = v.front() < 0.0 ? -1.0 : 1.0;
  for (double& a : v) a = sign * (a / peak);
  result.vector = std::move(v);
  return result;
}

IndicatorError IndicatorErrorOf(std::span<const double> x, const NodeSet& c) {
  if (!c.empty() && c.ids().back() > x.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cluster node " + std::to_string(c.ids().back()) + " beyond signal length " +
                    std::to_string(x.size()));
  }
  const std::vector<char> in = c.mask(x.size());
  IndicatorError err;
  double sum2 = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - (in[k] ? 1.0 : 0.0);
    sum2 += d * d;
    err.linf = std::max(err.linf, std::abs(d));
  }
  err.l2 = std::sqrt(sum2);
  return err;
}

}  // namespace nlasso
