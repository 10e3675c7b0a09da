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

#ifndef NLASSO_TESTS_TEST_UTIL_HPP_
#define NLASSO_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "nlasso/error.hpp"
#include "nlasso/graph.hpp"
#include "nlasso/objectives.hpp"
#include "oracle/oracle.hpp"

namespace testutil {

inline oracle::Instance ToInstance(const nlasso::NLassoProblem& p) {
  oracle::Instance in;
  in.n = p.graph().node_count();
  for (const auto& e : p.graph().edges()) in.edges.push_back({e.tail, e.head, e.weight});
  in.seed.assign(in.n, false);
  for (nlasso::NodeId s : p.seeds().ids()) in.seed[s - 1] = true;
  in.alpha = p.alpha();
  in.lambda = p.lambda();
  return in;
}

inline double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

inline double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline std::vector<double> RandomVector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                        double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

// Random spanning tree plus extra edges with probability `extra`.
inline nlasso::Graph RandomConnectedGraph(std::mt19937_64& rng, std::size_t n, double extra,
                                          double w_lo = 0.5, double w_hi = 2.0) {
  std::uniform_real_distribution<double> w(w_lo, w_hi), coin(0.0, 1.0);
  std::vector<nlasso::EdgeInput> edges;
  std::vector<std::vector<bool>> used(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t k = 2; k <= n; ++k) {
    const auto parent = std::uniform_int_distribution<std::size_t>(1, k - 1)(rng);
    edges.push_back({static_cast<nlasso::NodeId>(parent), static_cast<nlasso::NodeId>(k), w(rng)});
    used[parent][k] = true;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (!used[i][j] && coin(rng) < extra) {
        edges.push_back({static_cast<nlasso::NodeId>(i), static_cast<nlasso::NodeId>(j), w(rng)});
      }
    }
  }
  return nlasso::Graph::Build(n, edges);
}

template <typename F>
nlasso::ErrorKind KindOf(F&& f) {
  try {
    f();
  } catch (const nlasso::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected nlasso::Error");
}

}  // namespace testutil

#endif  // NLASSO_TESTS_TEST_UTIL_HPP_
