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

#include "nlasso/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "nlasso/error.hpp"

namespace nlasso {

namespace {

// splitmix64 finalizer.
std::uint64_t Mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform integer in [0, bound) without modulo bias. The raw engine output
// is fully specified by the standard, unlike std::uniform_int_distribution.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace

Graph ChainGraph(std::size_t n, double default_weight, std::span<const WeightOverride> overrides) {
  if (n < 1) throw Error(ErrorKind::kInvalidNode, "chain needs at least one node");
  std::vector<EdgeInput> edges;
  edges.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    edges.push_back({static_cast<NodeId>(k), static_cast<NodeId>(k + 1), default_weight});
  }
  for (const WeightOverride& o : overrides) {
    if (o.edge_index < 1 || o.edge_index >= n) {
      throw Error(ErrorKind::kInvalidOverride, "override index " + std::to_string(o.edge_index) +
                                                   " outside 1.." + std::to_string(n - 1));
    }
    edges[o.edge_index - 1].weight = o.weight;
  }
  return Graph::Build(n, edges);
}

double PairUniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
  const std::uint64_t h = Mix(Mix(Mix(seed) ^ i) ^ j);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

SbmGraph MakeSbmGraph(const SbmSpec& spec) {
  if (!(spec.p_out >= 0.0 && spec.p_out <= spec.p_in && spec.p_in <= 1.0)) {
    throw Error(ErrorKind::kInvalidProblem, "need 0 <= p_out <= p_in <= 1");
  }
  std::size_t n = 0;
  for (std::size_t size : spec.block_sizes) {
    if (size == 0) throw Error(ErrorKind::kInvalidProblem, "empty block");
    n += size;
  }
  if (n < 2) throw Error(ErrorKind::kInvalidProblem, "SBM needs at least two nodes");

  SbmGraph out;
  std::vector<std::size_t> block_of;
  block_of.reserve(n);
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
    std::vector<NodeId> ids(spec.block_sizes[b]);
    std::iota(ids.begin(), ids.end(), static_cast<NodeId>(block_of.size() + 1));
    block_of.insert(block_of.end(), ids.size(), b);
    out.blocks.emplace_back(std::move(ids), n);
  }

  std::vector<EdgeInput> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const double p = block_of[i - 1] == block_of[j - 1] ? spec.p_in : spec.p_out;
      if (PairUniform(spec.rng_seed, i, j) < p) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), 1.0});
      }
    }
  }
  out.graph = Graph::Build(n, edges);
  for (NodeId i = 1; i <= n; ++i) {
    if (out.graph.degree(i) == 0) out.isolated.push_back(i);
  }
  return out;
}

NodeSet SampleSeeds(const NodeSet& block, std::size_t count, std::uint64_t rng_seed,
                    std::size_t n) {
  if (count == 0 || count > block.size()) {
    throw Error(ErrorKind::kCountTooLarge, "cannot draw " + std::to_string(count) +
                                               " seeds from a block of " +
                                               std::to_string(block.size()));
  }
  std::vector<NodeId> pool(block.ids().begin(), block.ids().end());
  std::mt19937_64 rng(rng_seed);
  // Partial Fisher-Yates: the first `count` slots end up a uniform sample.
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t pick = k + UniformBelow(rng, pool.size() - k);
    std::swap(pool[k], pool[pick]);
  }
  pool.resize(count);
  return NodeSet(std::move(pool), n);
}

Graph GridFromImage(const GreyImage& img, double sigma) {
  const std::size_t w = img.width;
  const std::size_t h = img.height;
  if (w * h < 2 || img.pixels.size() != w * h) {
    throw Error(ErrorKind::kMalformedInput, "image must have width*height >= 2 pixels");
  }
  if (!(sigma > 0.0)) throw Error(ErrorKind::kInvalidProblem, "sigma must be > 0");

  auto weight = [&](std::size_t a, std::size_t b) {
    const double d = static_cast<double>(img.pixels[a]) - static_cast<double>(img.pixels[b]);
    // Stays strictly positive even when the exponential underflows.
    return std::max(std::exp(-d * d / (sigma * sigma)), std::numeric_limits<double>::min());
  };
  std::vector<EdgeInput> edges;
  edges.reserve(2 * w * h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t k = r * w + c;
      if (c + 1 < w) {
        edges.push_back({static_cast<NodeId>(k + 1), static_cast<NodeId>(k + 2), weight(k, k + 1)});
      }
      if (r + 1 < h) {
        edges.push_back(
            {static_cast<NodeId>(k + 1), static_cast<NodeId>(k + w + 1), weight(k, k + w)});
      }
    }
  }
  return Graph::Build(w * h, edges);
}

}  // namespace nlasso
