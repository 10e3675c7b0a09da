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

#include <algorithm>
#include <random>
#include <type_traits>

#include "nlasso/graph.hpp"
#include "test_util.hpp"

using namespace nlasso;
using testutil::KindOf;

static_assert(!std::is_invocable_v<decltype(&Augment), const AugmentedGraph&>,
              "an augmented graph must not be augmentable again");

TEST_CASE("build canonicalizes orientation") {
  const Graph g = BuildGraph(2, {{2, 1, 1.0}});
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edge(0) == Edge{1, 2, 1.0});
}

TEST_CASE("build rejects bad input") {
  CHECK(KindOf([] { BuildGraph(3, {{1, 2, 1}, {2, 1, 1}}); }) == ErrorKind::kDuplicateEdge);
  CHECK(KindOf([] { BuildGraph(3, {{2, 2, 1}}); }) == ErrorKind::kInvalidEdge);
  CHECK(KindOf([] { BuildGraph(3, {{1, 2, 0.0}}); }) == ErrorKind::kInvalidWeight);
  CHECK(KindOf([] { BuildGraph(3, {{1, 2, -1.0}}); }) == ErrorKind::kInvalidWeight);
  CHECK(KindOf([] { BuildGraph(3, {{1, 4, 1.0}}); }) == ErrorKind::kInvalidNode);
  CHECK(KindOf([] { BuildGraph(3, {{0, 1, 1.0}}); }) == ErrorKind::kInvalidNode);
  CHECK(KindOf([] { BuildGraph(0, {}); }) == ErrorKind::kInvalidNode);
}

TEST_CASE("adjacency lists are sorted and sum to the degree") {
  const Graph g = BuildGraph(5, {{3, 1, 1}, {5, 3, 2}, {2, 3, 1}, {3, 4, 1}});
  const auto out = g.out_neighbors(3);
  const auto in = g.in_neighbors(3);
  REQUIRE(out.size() == 2);
  REQUIRE(in.size() == 2);
  CHECK(out[0].neighbor == 4);
  CHECK(out[1].neighbor == 5);
  CHECK(in[0].neighbor == 1);
  CHECK(in[1].neighbor == 2);
  CHECK(g.degree(3) == 4);
  CHECK(g.weighted_degree(3) == doctest::Approx(5.0));
  for (const auto& inc : out) CHECK(g.edge(inc.edge).tail == 3);
  CHECK(g.find_edge(5, 3).has_value());
  CHECK_FALSE(g.find_edge(1, 2).has_value());
}

TEST_CASE("build is order insensitive") {
  std::vector<EdgeInput> edges = {{1, 2, 1.5}, {2, 3, 0.5}, {4, 1, 2.0}, {3, 4, 1.0}, {1, 3, 0.7}};
  const Graph ref = Graph::Build(4, edges);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges) {
      if (rng() & 1) std::swap(e.i, e.j);
    }
    CHECK(Graph::Build(4, edges) == ref);
  }
}

TEST_CASE("incidence examples") {
  const Graph g = BuildGraph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  const std::vector<double> x = {1, 1, 0, 0};
  CHECK(IncidenceApply(g, x) == std::vector<double>{0, 1, 0});
  const std::vector<double> c(4, 3.25);
  CHECK(IncidenceApply(g, c) == std::vector<double>{0, 0, 0});
  const Graph two = BuildGraph(2, {{1, 2, 1}});
  const std::vector<double> x2 = {1, 0};
  CHECK(IncidenceApply(two, x2) == std::vector<double>{1});
  const std::vector<double> bad = {1, 2};
  CHECK(KindOf([&] { IncidenceApply(g, bad); }) == ErrorKind::kDimensionMismatch);
}

TEST_CASE("divergence examples") {
  const Graph two = BuildGraph(2, {{1, 2, 1}});
  const std::vector<double> y = {1};
  CHECK(Divergence(two, y) == std::vector<double>{1, -1});
  const std::vector<double> zero = {0};
  CHECK(Divergence(two, zero) == std::vector<double>{0, 0});
  const std::vector<double> bad = {1, 2};
  CHECK(KindOf([&] { Divergence(two, bad); }) == ErrorKind::kDimensionMismatch);
}

TEST_CASE("incidence and divergence are adjoint; divergence sums to zero") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = testutil::RandomConnectedGraph(rng, n, 0.2);
    const auto x = testutil::RandomVector(rng, n);
    const auto y = testutil::RandomVector(rng, g.edge_count());
    const double lhs = testutil::Dot(IncidenceApply(g, x), y);
    const auto div = Divergence(g, y);
    const double rhs = testutil::Dot(x, div);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    double total = 0.0;
    for (double d : div) total += d;
    CHECK(std::abs(total) <= 1e-12 * static_cast<double>(g.edge_count()));
    for (NodeId i = 1; i <= n; ++i) CHECK(DivergenceAt(g, y, i) == div[i - 1]);
  }
}

TEST_CASE("boundary") {
  const Graph chain = [] {
    std::vector<EdgeInput> e;
    for (NodeId k = 1; k < 100; ++k) e.push_back({k, k + 1, k == 4 ? 1.0 : 5.0 / 4.0});
    return Graph::Build(100, e);
  }();
  CHECK(chain.edge_count() == 99);
  const NodeSet c({1, 2, 3, 4}, 100);
  const auto b = Boundary(chain, c);
  REQUIRE(b.size() == 1);
  CHECK(chain.edge(b[0]) == Edge{4, 5, 1.0});
  CHECK(BoundaryWeight(chain, c) == 1.0);

  std::vector<NodeId> all(100);
  std::iota(all.begin(), all.end(), 1);
  CHECK(Boundary(chain, NodeSet(all, 100)).empty());

  const Graph cycle = BuildGraph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}});
  CHECK(Boundary(cycle, NodeSet({1, 2}, 4)).size() == 2);
  CHECK(Boundary(cycle, NodeSet({1, 2}, 4)) == Boundary(cycle, NodeSet({3, 4}, 4)));
  CHECK(KindOf([&] { Boundary(cycle, NodeSet({5}, 6)); }) == ErrorKind::kInvalidNode);
}

TEST_CASE("boundary of a set equals boundary of its complement") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 20;
    const Graph g = testutil::RandomConnectedGraph(rng, n, 0.3);
    std::vector<NodeId> in, out;
    for (NodeId i = 1; i <= n; ++i) (rng() & 1 ? in : out).push_back(i);
    CHECK(Boundary(g, NodeSet(in, n)) == Boundary(g, NodeSet(out, n)));
  }
}

TEST_CASE("node sets") {
  const NodeSet s({4, 1, 3}, 5);
  CHECK(std::vector<NodeId>(s.ids().begin(), s.ids().end()) == std::vector<NodeId>{1, 3, 4});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(NodeSet({1}, 5).is_subset_of(s));
  CHECK(KindOf([] { NodeSet({1, 1}, 3); }) == ErrorKind::kInvalidNode);
  CHECK(KindOf([] { NodeSet({4}, 3); }) == ErrorKind::kInvalidNode);
}

TEST_CASE("augment") {
  const AugmentedGraph single = Augment(Graph::Build(1, {}));
  CHECK(single.star_edge_count() == 1);
  CHECK(single.star_node() == 2);

  std::vector<EdgeInput> e;
  for (NodeId k = 1; k < 100; ++k) e.push_back({k, k + 1, 1.25});
  const AugmentedGraph aug = Augment(Graph::Build(100, e));
  CHECK(aug.base().edge_count() == 99);
  CHECK(aug.star_edge_count() == 100);
  CHECK(aug.edge_count() == 199);
  CHECK(aug.star_edge(1) == 99);
  CHECK(aug.star_node() == 101);
}

TEST_CASE("connectivity") {
  CHECK(BuildGraph(3, {{1, 2, 1}, {2, 3, 1}}).is_connected());
  CHECK_FALSE(BuildGraph(3, {{1, 2, 1}}).is_connected());
}
