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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nlasso/baselines.hpp"
#include "nlasso/generators.hpp"
#include "nlasso/objectives.hpp"
#include "test_util.hpp"

using namespace nlasso;
using testutil::KindOf;

namespace {

Graph PaperChain() {
  const WeightOverride o{4, 1.0};
  return ChainGraph(100, 5.0 / 4.0, std::span(&o, 1));
}

std::vector<double> Indicator(std::size_t n, std::initializer_list<NodeId> ids) {
  std::vector<double> x(n, 0.0);
  for (NodeId i : ids) x[i - 1] = 1.0;
  return x;
}

NLassoProblem RandomProblem(std::mt19937_64& rng, std::size_t n) {
  Graph g = testutil::RandomConnectedGraph(rng, n, 0.3);
  std::vector<NodeId> seeds;
  for (NodeId i = 1; i <= n; ++i) {
    if (rng() % 3 == 0) seeds.push_back(i);
  }
  if (seeds.empty()) seeds.push_back(1);
  std::uniform_real_distribution<double> a(0.01, 1.0), l(0.05, 0.5);
  return NLassoProblem(std::move(g), NodeSet(seeds, n), a(rng), l(rng));
}

// Primal fidelity f(w) written out independently.
double FidelityRef(const NLassoProblem& p, std::span<const double> w) {
  double v = 0.0;
  for (NodeId i = 1; i <= w.size(); ++i) {
    const double t = w[i - 1];
    v += p.is_seed(i) ? 0.5 * (t - 1) * (t - 1) : 0.5 * p.alpha() * t * t;
  }
  return v;
}

}  // namespace

TEST_CASE("problem validation") {
  const Graph g = BuildGraph(2, {{1, 2, 1}});
  CHECK(KindOf([&] { NLassoProblem(g, NodeSet(), 0.1, 0.1); }) == ErrorKind::kInvalidProblem);
  CHECK(KindOf([&] { NLassoProblem(g, NodeSet({1}, 2), 0.0, 0.1); }) ==
        ErrorKind::kInvalidProblem);
  CHECK(KindOf([&] { NLassoProblem(g, NodeSet({1}, 2), 0.1, -1.0); }) ==
        ErrorKind::kInvalidProblem);
  CHECK(KindOf([&] { NLassoProblem(g, NodeSet({3}, 3), 0.1, 0.1); }) == ErrorKind::kInvalidNode);
}

TEST_CASE("total variation examples") {
  const Graph chain = PaperChain();
  CHECK(TotalVariation(chain, std::vector<double>(100, 0.7)) == 0.0);
  CHECK(TotalVariation(chain, Indicator(100, {1, 2, 3, 4})) == 1.0);
  const Graph two = BuildGraph(2, {{1, 2, 2.0}});
  CHECK(TotalVariation(two, std::vector<double>{3, 1}) == 4.0);
  CHECK(LaplacianQuadratic(two, std::vector<double>{3, 1}) == 8.0);
  CHECK(LaplacianQuadratic(chain, std::vector<double>(100, -2.0)) == 0.0);
  CHECK(KindOf([&] { TotalVariation(two, std::vector<double>{1}); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("primal objective examples") {
  const NLassoProblem chain(PaperChain(), NodeSet({1}, 100), 1.0 / 200.0, 0.2);
  CHECK(PrimalObjective(chain, std::vector<double>(100, 0.0)) == doctest::Approx(0.5));
  CHECK(PrimalObjective(chain, std::vector<double>(100, 1.0)) ==
        doctest::Approx(0.005 * 99 / 2).epsilon(1e-14));
  // 0 + (alpha/2) * 3 + lambda * 1
  CHECK(PrimalObjective(chain, Indicator(100, {1, 2, 3, 4})) ==
        doctest::Approx(0.2075).epsilon(1e-14));
}

TEST_CASE("scaling and convexity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const NLassoProblem p = RandomProblem(rng, 2 + rng() % 15);
    const std::size_t n = p.graph().node_count();
    const auto x = testutil::RandomVector(rng, n, -2, 2);
    const auto z = testutil::RandomVector(rng, n, -2, 2);
    const double a = std::uniform_real_distribution<double>(-3, 3)(rng);
    std::vector<double> ax(n), mid(n);
    for (std::size_t k = 0; k < n; ++k) {
      ax[k] = a * x[k];
      mid[k] = 0.5 * (x[k] + z[k]);
    }
    const double tv = TotalVariation(p.graph(), x);
    const double lq = LaplacianQuadratic(p.graph(), x);
    CHECK(TotalVariation(p.graph(), ax) == doctest::Approx(std::abs(a) * tv).epsilon(1e-12));
    CHECK(LaplacianQuadratic(p.graph(), ax) == doctest::Approx(a * a * lq).epsilon(1e-12));
    CHECK(PrimalObjective(p, mid) <=
          0.5 * (PrimalObjective(p, x) + PrimalObjective(p, z)) + 1e-12);

    const auto lx = MakeLaplacian(p.graph(), LaplacianMode::kUnnormalized).Apply(x);
    CHECK(testutil::Dot(x, lx) == doctest::Approx(lq).epsilon(1e-12));
  }
}

TEST_CASE("dual objective examples") {
  const Graph g = BuildGraph(3, {{1, 2, 1}, {2, 3, 1}});
  const NLassoProblem p(g, NodeSet({1, 3}, 3), 0.1, 0.5);
  EdgeFlow zero{std::vector<double>(5, 0.0), true};
  CHECK(DualObjective(p, zero) == 2.0);
  EdgeFlow unit{{0.3, -0.7, 1.0, 0.0, 1.0}, true};
  CHECK(DualObjective(p, unit) == 0.0);
  CHECK(KindOf([&] { DualObjective(p, EdgeFlow{{0, 0}, false}); }) == ErrorKind::kNotAugmented);
  CHECK(KindOf([&] { DualObjective(p, EdgeFlow{{0, 0}, true}); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("dual optimum matches primal optimum on tiny trees") {
  // The negated solver flow minimizes the dual; its value is |S| - 2 p*.
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 4;
    Graph g = testutil::RandomConnectedGraph(rng, n, 0.0);
    std::uniform_real_distribution<double> a(0.01, 1.0), l(0.05, 0.5);
    const NLassoProblem p(std::move(g), NodeSet({static_cast<NodeId>(1 + rng() % n)}, n), a(rng),
                          l(rng));
    const auto in = testutil::ToInstance(p);
    const auto x = oracle::ExactMinimizer(in);
    auto y = oracle::TreeDual(in, x);
    CHECK(ConjugateGFeasible(p, y));
    for (double& v : y) v = -v;
    const EdgeFlow aug = AugmentFlow(p.graph(), y);
    CHECK(DualFeasibility(p, aug, 1e-12).feasible);
    const double pstar = oracle::Objective(in, x);
    CHECK(DualObjective(p, aug) == doctest::Approx(1.0 - 2.0 * pstar).epsilon(1e-10));
  }
}

TEST_CASE("dual feasibility") {
  const Graph g = BuildGraph(2, {{1, 2, 2.0}});
  const NLassoProblem p(g, NodeSet({1}, 2), 0.1, 0.5);
  const auto ok = DualFeasibility(p, EdgeFlow{{0, 0, 0}, true}, 0.0);
  CHECK(ok.feasible);
  CHECK(ok.conservation_residual.size() == 3);

  const auto bad = DualFeasibility(p, EdgeFlow{{0.5, 0, 0}, true}, 1e-9);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.conservation_residual[0] == 0.5);
  CHECK(bad.conservation_residual[1] == 0.5);
  CHECK(bad.conservation_residual[2] == 0.0);

  const double cap = 0.5 * 2.0;
  const auto over = DualFeasibility(p, AugmentFlow(g, std::vector<double>{cap * (1 + 1e-3)}), 1e-9);
  CHECK_FALSE(over.feasible);
  CHECK(over.capacity_violation[0] == doctest::Approx(cap * 1e-3).epsilon(1e-9));
  CHECK(KindOf([&] { DualFeasibility(p, EdgeFlow{{0}, false}, 0.0); }) ==
        ErrorKind::kNotAugmented);
}

TEST_CASE("conjugate of f") {
  const Graph g = BuildGraph(2, {{1, 2, 1}});
  const NLassoProblem p(g, NodeSet({1}, 2), 0.25, 0.5);
  CHECK(ConjugateF(p, std::vector<double>{0, 0}) == 0.0);
  CHECK(ConjugateF(p, std::vector<double>{1, 0}) == 1.5);
  CHECK(ConjugateF(p, std::vector<double>{0, 1}) == 2.0);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const NLassoProblem q = RandomProblem(rng, 1 + rng() % 5 + 1);
    const std::size_t n = q.graph().node_count();
    const auto z = testutil::RandomVector(rng, n, -2, 2);
    const double fz = ConjugateF(q, z);
    for (int s = 0; s < 20; ++s) {
      const auto w = testutil::RandomVector(rng, n, -5, 5);
      CHECK(fz >= testutil::Dot(z, w) - FidelityRef(q, w) - 1e-12);
    }
    // The supremum separates per node; ternary search each concave piece.
    double sup = 0.0;
    for (NodeId i = 1; i <= n; ++i) {
      auto h = [&](double w) {
        return z[i - 1] * w -
               (q.is_seed(i) ? 0.5 * (w - 1) * (w - 1) : 0.5 * q.alpha() * w * w);
      };
      double lo = -1000, hi = 1000;
      for (int it = 0; it < 300; ++it) {
        const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        (h(m1) < h(m2) ? lo : hi) = h(m1) < h(m2) ? m1 : m2;
      }
      sup += h(0.5 * (lo + hi));
    }
    CHECK(sup == doctest::Approx(fz).epsilon(1e-6));
  }
}

TEST_CASE("conjugate of g feasibility") {
  const Graph g = BuildGraph(3, {{1, 2, 2.0}, {2, 3, 1.0}});
  const NLassoProblem p(g, NodeSet({1}, 3), 0.1, 0.3);
  CHECK(ConjugateGFeasible(p, std::vector<double>{0, 0}));
  CHECK(ConjugateGFeasible(p, std::vector<double>{p.capacity(0), -p.capacity(1)}));
  CHECK_FALSE(ConjugateGFeasible(p, std::vector<double>{2 * p.capacity(0), 0}));
  CHECK(KindOf([&] { ConjugateGFeasible(p, std::vector<double>{0}); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("duality gap") {
  const Graph path = BuildGraph(3, {{1, 2, 1.0}, {2, 3, 1.5}});
  const NLassoProblem p(path, NodeSet({1}, 3), 0.1, 0.2);
  const auto gap0 = DualityGap(p, std::vector<double>{0, 0, 0}, std::vector<double>{0, 0});
  REQUIRE(gap0.has_value());
  CHECK(*gap0 == 0.5);

  const auto in = testutil::ToInstance(p);
  const auto x = oracle::ExactMinimizer(in);
  const auto y = oracle::TreeDual(in, x);
  const auto gap = DualityGap(p, x, y);
  REQUIRE(gap.has_value());
  CHECK(std::abs(*gap) <= 1e-8);

  CHECK_FALSE(DualityGap(p, x, std::vector<double>{1.0, 0.0}).has_value());

  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const NLassoProblem q = RandomProblem(rng, 2 + rng() % 10);
    const auto xr = testutil::RandomVector(rng, q.graph().node_count(), -1, 2);
    auto yr = testutil::RandomVector(rng, q.graph().edge_count());
    for (EdgeId e = 0; e < yr.size(); ++e) yr[e] *= q.capacity(e);
    const auto gr = DualityGap(q, xr, yr);
    REQUIRE(gr.has_value());
    CHECK(*gr >= -1e-12);
  }
}
