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

// Weighted simple graph with canonical orientation (tail < head) and the
// linear operators that act on node and edge signals.

#ifndef NLASSO_GRAPH_HPP_
#define NLASSO_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace nlasso {

// Nodes are numbered 1..n. Internally, node i lives at index i - 1 of every
// NodeSignal.
using NodeId = std::uint32_t;
using EdgeId = std::size_t;

// Real-valued function on the nodes, indexed by NodeId - 1.
using NodeSignal = std::vector<double>;

struct EdgeInput {
  NodeId i;
  NodeId j;
  double weight;
};

// A stored edge. Always tail < head.
struct Edge {
  NodeId tail;
  NodeId head;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One entry of an adjacency list: the neighbour and the connecting edge.
struct Incidence {
  NodeId neighbor;
  EdgeId edge;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Sorted set of node ids within 1..n.
class NodeSet {
 public:
  NodeSet() = default;

  // Sorts and validates. Throws kInvalidNode for ids outside 1..n and for
  // repeated ids.
  NodeSet(std::vector<NodeId> ids, std::size_t n);
  NodeSet(std::initializer_list<NodeId> ids, std::size_t n)
      : NodeSet(std::vector<NodeId>(ids), n) {}

  std::span<const NodeId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(NodeId i) const;
  bool is_subset_of(const NodeSet& other) const;

  // Membership mask over 1..n (index i - 1).
  std::vector<char> mask(std::size_t n) const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

// Immutable after construction; safe for concurrent readers.
class Graph {
 public:
  // Canonicalizes every entry to (min, max) and sorts edges
  // lexicographically. Throws kInvalidNode, kInvalidEdge (self-loop),
  // kDuplicateEdge or kInvalidWeight (w <= 0 or non-finite).
  static Graph Build(std::size_t n, std::span<const EdgeInput> edges);

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // N_i^+ : neighbours j > i, ascending.
  std::span<const Incidence> out_neighbors(NodeId i) const;
  // N_i^- : neighbours j < i, ascending.
  std::span<const Incidence> in_neighbors(NodeId i) const;

  std::size_t degree(NodeId i) const;
  double weighted_degree(NodeId i) const;

  std::optional<EdgeId> find_edge(NodeId i, NodeId j) const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency; offsets have n + 1 entries.
  std::vector<std::size_t> out_offsets_;
  std::vector<Incidence> out_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Incidence> in_;
};

Graph BuildGraph(std::size_t n, std::span<const EdgeInput> edges);
inline Graph BuildGraph(std::size_t n, std::initializer_list<EdgeInput> edges) {
  return Graph::Build(n, std::span<const EdgeInput>(edges.begin(), edges.size()));
}

// (Bx)_e = x_i - x_j for e = (i, j), in edge order.
std::vector<double> IncidenceApply(const Graph& g, std::span<const double> x);

// (B^T y)_i = sum_{j in N_i^+} y_(i,j) - sum_{j in N_i^-} y_(j,i).
// Each node accumulates over its neighbours in ascending id order, so the
// result does not depend on how nodes are split across workers.
NodeSignal Divergence(const Graph& g, std::span<const double> y);

// Divergence at a single node, same accumulation order as Divergence().
double DivergenceAt(const Graph& g, std::span<const double> y, NodeId i);

// Edges with exactly one endpoint in c, in edge order.
std::vector<EdgeId> Boundary(const Graph& g, const NodeSet& c);
double BoundaryWeight(const Graph& g, const NodeSet& c);

// The graph plus a star node n + 1 and one uncapacitated edge (i, star) per
// base node. Star edges are numbered after the base edges: star edge of node
// i has id edge_count() + i - 1.
class AugmentedGraph {
 public:
  const Graph& base() const { return base_; }
  NodeId star_node() const { return static_cast<NodeId>(base_.node_count() + 1); }
  std::size_t star_edge_count() const { return base_.node_count(); }
  std::size_t edge_count() const { return base_.edge_count() + star_edge_count(); }
  EdgeId star_edge(NodeId i) const { return base_.edge_count() + i - 1; }

 private:
  friend AugmentedGraph Augment(const Graph& g);
  explicit AugmentedGraph(Graph base) : base_(std::move(base)) {}

  Graph base_;
};

// Only accepts a plain Graph; augmenting twice does not compile.
AugmentedGraph Augment(const Graph& g);

}  // namespace nlasso

#endif  // NLASSO_GRAPH_HPP_
