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

// Deterministic constructors for chain, stochastic block model and image
// grid graphs.

#ifndef NLASSO_GENERATORS_HPP_
#define NLASSO_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nlasso/graph.hpp"

namespace nlasso {

// Edge index k (1-based) is the edge {k, k+1}.
struct WeightOverride {
  std::size_t edge_index;
  double weight;
};

// Path 1 - 2 - ... - n. Throws kInvalidOverride for indices outside 1..n-1.
Graph ChainGraph(std::size_t n, double default_weight,
                 std::span<const WeightOverride> overrides = {});

struct SbmSpec {
  std::vector<std::size_t> block_sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t rng_seed = 0;
};

struct SbmGraph {
  Graph graph;
  std::vector<NodeSet> blocks;  // consecutive id ranges, in block order
  std::vector<NodeId> isolated;
};

// Every unordered pair {i, j} is an edge (weight 1) with probability p_in
// inside a block and p_out across blocks. The coin for a pair is a pure
// function of (rng_seed, i, j), so the graph does not depend on the order
// in which pairs are visited. Throws kInvalidProblem for bad probabilities
// or fewer than two nodes.
SbmGraph MakeSbmGraph(const SbmSpec& spec);

// Uniform in [0, 1) for the key (seed, i, j); exposed for testing.
double PairUniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j);

// `count` distinct nodes drawn uniformly from `block`. Throws kCountTooLarge
// if count exceeds the block size (or is zero).
NodeSet SampleSeeds(const NodeSet& block, std::size_t count, std::uint64_t rng_seed,
                    std::size_t n);

struct GreyImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major
};

inline constexpr double kDefaultSigma = 20.0;

// 4-connected pixel grid. Pixel (row, col) is node row * width + col + 1 and
// W = exp(-(g_i - g_j)^2 / sigma^2). Throws kMalformedInput if the image has
// fewer than two pixels or the wrong pixel count.
Graph GridFromImage(const GreyImage& img, double sigma = kDefaultSigma);

}  // namespace nlasso

#endif  // NLASSO_GENERATORS_HPP_
