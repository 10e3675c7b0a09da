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

// Command implementations behind the `nlasso` executable. Each command
// writes its artifacts into an output directory and returns a process exit
// status: 0 success, 2 bad input, 3 runtime failure.

#ifndef NLASSO_CLI_HPP_
#define NLASSO_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "nlasso/certificates.hpp"
#include "nlasso/io.hpp"
#include "nlasso/solver.hpp"

namespace nlasso::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitRuntime = 3;

// Everything `solve` needs. Either `graph_path` or `generator` names the
// graph; either `seeds_path` or `seed_count` (SBM generator only) the seeds.
//
// Generator syntax:
//   chain <n> <weight> [<edge_index>:<weight> ...]
//   sbm <size>,<size>,... <p_in> <p_out>
struct RunManifest {
  std::string graph_path;
  std::string generator;
  std::string seeds_path;
  std::size_t seed_count = 0;
  double alpha = 0.0;
  double lambda = 0.0;
  std::size_t max_iters = 1000;
  double threshold = kDefaultThreshold;
  std::filesystem::path out_dir = ".";
  std::uint64_t rng_seed = 0;
  int workers = 0;
};

// Reads the keys graph, generator, seeds, seed_count, alpha, lambda, iters,
// threshold, out, rng_seed, workers. Unknown keys are rejected.
RunManifest ManifestFromKeyValues(const io::KeyValues& kv);

// Throws Error(kInvalidConfig) when alpha, lambda, iters or the graph/seed
// sources are missing or out of range.
void ValidateManifest(const RunManifest& m);

// Certificate block written to certificates.txt. Proposition-style checks
// are reported only when the cluster contains the seeds; the U bound only
// when `u` is given.
io::KeyValues CertificateReport(const NLassoProblem& p, const SolverResult& r,
                                const ClusterResult& c, std::optional<std::size_t> u = {});

int CmdSolve(const RunManifest& m, std::ostream& err);

struct ChainOptions {
  std::filesystem::path out_dir = ".";
  int workers = 0;
  std::size_t max_iters = 1000;
};
int CmdChainExperiment(const ChainOptions& opt, std::ostream& err);

struct SbmOptions {
  std::filesystem::path out_dir = ".";
  std::uint64_t rng_seed = 0;
  int workers = 0;
  std::size_t block_size = 100;
  double p_in = 1.0 / 5.0;
  double p_out = 1.0 / 100.0;
  std::size_t seed_count = 20;
  double alpha = 1.0 / 40.0;
  double lambda = 1.0 / 200.0;
  std::size_t max_iters = 1000;
  double threshold = kDefaultThreshold;
};
int CmdSbmExperiment(const SbmOptions& opt, std::ostream& err);

// Fraction of nodes whose in/out-of-cluster label agrees with membership in
// `block`.
double LabelingAccuracy(const NodeSet& cluster, const NodeSet& block, std::size_t n);

struct SegmentOptions {
  std::filesystem::path image_path;
  std::filesystem::path seeds_path;
  std::filesystem::path out_dir = ".";
  double alpha = 1.0 / 100.0;
  double lambda = 1.0;
  std::size_t max_iters = 1000;
  double sigma = kDefaultSigma;
  double threshold = kDefaultThreshold;
  int workers = 0;
};
int CmdSegment(const SegmentOptions& opt, std::ostream& err);

// Argument parsing and dispatch for the executable.
int Main(int argc, char** argv);

}  // namespace nlasso::cli

#endif  // NLASSO_CLI_HPP_
