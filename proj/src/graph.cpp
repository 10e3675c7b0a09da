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

#include "nlasso/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "checks.hpp"
#include "nlasso/error.hpp"

namespace nlasso {

using internal::CheckLength;

// --- NodeSet ---------------------------------------------------------------

NodeSet::NodeSet(std::vector<NodeId> ids, std::size_t n) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  for (std::size_t k = 0; k < ids_.size(); ++k) {
    if (ids_[k] < 1 || ids_[k] > n) {
      throw Error(ErrorKind::kInvalidNode,
                  "node " + std::to_string(ids_[k]) + " outside 1.." + std::to_string(n));
    }
    if (k > 0 && ids_[k] == ids_[k - 1]) {
      throw Error(ErrorKind::kInvalidNode, "node " + std::to_string(ids_[k]) + " repeated");
    }
  }
}

bool NodeSet::contains(NodeId i) const {
  return std::binary_search(ids_.begin(), ids_.end(), i);
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

std::vector<char> NodeSet::mask(std::size_t n) const {
  std::vector<char> m(n, 0);
  for (NodeId i : ids_) {
    if (i >= 1 && i <= n) m[i - 1] = 1;
  }
  return m;
}

// --- Graph -----------------------------------------------------------------

Graph Graph::Build(std::size_t n, std::span<const EdgeInput> input) {
  if (n < 1) throw Error(ErrorKind::kInvalidNode, "graph needs at least one node");

  Graph g;
  g.n_ = n;
  g.edges_.reserve(input.size());
  for (const EdgeInput& in : input) {
    if (in.i < 1 || in.i > n || in.j < 1 || in.j > n) {
      throw Error(ErrorKind::kInvalidNode, "edge (" + std::to_string(in.i) + ", " +
                                               std::to_string(in.j) + ") outside 1.." +
                                               std::to_string(n));
    }
    if (in.i == in.j) {
      throw Error(ErrorKind::kInvalidEdge, "self-loop at node " + std::to_string(in.i));
    }
    if (!(in.weight > 0.0) || !std::isfinite(in.weight)) {
      throw Error(ErrorKind::kInvalidWeight, "edge (" + std::to_string(in.i) + ", " +
                                                 std::to_string(in.j) +
                                                 ") has non-positive weight");
    }
    g.edges_.push_back({std::min(in.i, in.j), std::max(in.i, in.j), in.weight});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  });
  for (std::size_t e = 1; e < g.edges_.size(); ++e) {
    if (g.edges_[e].tail == g.edges_[e - 1].tail && g.edges_[e].head == g.edges_[e - 1].head) {
      throw Error(ErrorKind::kDuplicateEdge, "edge {" + std::to_string(g.edges_[e].tail) + ", " +
                                                 std::to_string(g.edges_[e].head) +
                                                 "} given twice");
    }
  }

  // Out-lists come out sorted because edges are sorted by (tail, head).
  // In-lists are filled in edge order, i.e. ascending tail within each head.
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offsets_[e.tail];
    ++g.in_offsets_[e.head];
  }
  for (std::size_t i = 1; i <= n; ++i) {
    g.out_offsets_[i] += g.out_offsets_[i - 1];
    g.in_offsets_[i] += g.in_offsets_[i - 1];
  }
  g.out_.resize(g.edges_.size());
  g.in_.resize(g.edges_.size());
  std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const Edge& edge = g.edges_[e];
    g.out_[out_fill[edge.tail - 1]++] = {edge.head, e};
    g.in_[in_fill[edge.head - 1]++] = {edge.tail, e};
  }
  return g;
}

Graph BuildGraph(std::size_t n, std::span<const EdgeInput> edges) {
  return Graph::Build(n, edges);
}

std::span<const Incidence> Graph::out_neighbors(NodeId i) const {
  return std::span<const Incidence>(out_).subspan(out_offsets_[i - 1],
                                                  out_offsets_[i] - out_offsets_[i - 1]);
}

std::span<const Incidence> Graph::in_neighbors(NodeId i) const {
  return std::span<const Incidence>(in_).subspan(in_offsets_[i - 1],
                                                 in_offsets_[i] - in_offsets_[i - 1]);
}

std::size_t Graph::degree(NodeId i) const {
  return out_offsets_[i] - out_offsets_[i - 1] + in_offsets_[i] - in_offsets_[i - 1];
}

double Graph::weighted_degree(NodeId i) const {
  double d = 0.0;
  for (const Incidence& a : in_neighbors(i)) d += edges_[a.edge].weight;
  for (const Incidence& a : out_neighbors(i)) d += edges_[a.edge].weight;
  return d;
}

std::optional<EdgeId> Graph::find_edge(NodeId i, NodeId j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) return std::nullopt;
  const NodeId tail = std::min(i, j);
  const NodeId head = std::max(i, j);
  auto out = out_neighbors(tail);
  auto it = std::lower_bound(out.begin(), out.end(), head,
                             [](const Incidence& a, NodeId v) { return a.neighbor < v; });
  if (it == out.end() || it->neighbor != head) return std::nullopt;
  return it->edge;
}

bool Graph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<NodeId> stack{1};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId i = stack.back();
    stack.pop_back();
    for (auto list : {in_neighbors(i), out_neighbors(i)}) {
      for (const Incidence& a : list) {
        if (!seen[a.neighbor - 1]) {
          seen[a.neighbor - 1] = 1;
          ++reached;
          stack.push_back(a.neighbor);
        }
      }
    }
  }
  return reached == n_;
}

// --- operators -------------------------------------------------------------

std::vector<double> IncidenceApply(const Graph& g, std::span<const double> x) {
  CheckLength(x.size(), g.node_count(), "node signal");
  std::vector<double> out(g.edge_count());
  const auto edges = g.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    out[e] = x[edges[e].tail - 1] - x[edges[e].head - 1];
  }
  return out;
}

double DivergenceAt(const Graph& g, std::span<const double> y, NodeId i) {
  // In-neighbours all have smaller ids than out-neighbours, so visiting the
  // in-list and then the out-list is ascending neighbour order.
  double acc = 0.0;
  for (const Incidence& a : g.in_neighbors(i)) acc -= y[a.edge];
  for (const Incidence& a : g.out_neighbors(i)) acc += y[a.edge];
  return acc;
}

NodeSignal Divergence(const Graph& g, std::span<const double> y) {
  CheckLength(y.size(), g.edge_count(), "edge flow");
  NodeSignal out(g.node_count());
  for (NodeId i = 1; i <= g.node_count(); ++i) out[i - 1] = DivergenceAt(g, y, i);
  return out;
}

std::vector<EdgeId> Boundary(const Graph& g, const NodeSet& c) {
  for (NodeId i : c.ids()) {
    if (i > g.node_count()) {
      throw Error(ErrorKind::kInvalidNode, "cluster node " + std::to_string(i) + " out of range");
    }
  }
  const std::vector<char> in = c.mask(g.node_count());
  std::vector<EdgeId> out;
  const auto edges = g.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (in[edges[e].tail - 1] != in[edges[e].head - 1]) out.push_back(e);
  }
  return out;
}

double BoundaryWeight(const Graph& g, const NodeSet& c) {
  double w = 0.0;
  for (EdgeId e : Boundary(g, c)) w += g.edge(e).weight;
  return w;
}

AugmentedGraph Augment(const Graph& g) { return AugmentedGraph(g); }

}  // namespace nlasso
