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

#include "nlasso/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "nlasso/baselines.hpp"
#include "nlasso/error.hpp"
#include "nlasso/generators.hpp"

namespace nlasso::cli {

namespace {

constexpr double kFiedlerTol = 1e-10;
constexpr std::size_t kFiedlerMaxIters = 2'000'000;
constexpr std::size_t kChainNodes = 100;
constexpr std::size_t kChainPlotNodes = 20;
constexpr std::size_t kChainUBound = 80;

int ExitCodeFor(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kIsolatedNode:
    case ErrorKind::kNoConvergence:
    case ErrorKind::kDisconnected:
      return kExitRuntime;
    default:
      return kExitInput;
  }
}

template <typename Body>
int Guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return kExitOk;
  } catch (const Error& e) {
    err << "nlasso: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    err << "nlasso: " << e.what() << '\n';
    return kExitRuntime;
  }
}

[[noreturn]] void BadConfig(const std::string& what) { throw Error(ErrorKind::kInvalidConfig, what); }

template <typename T>
T ParseValue(const std::string& key, const std::string& text) {
  T v{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) BadConfig("bad value for " + key + ": '" + text + "'");
  return v;
}

std::vector<std::string> Tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct GeneratedGraph {
  Graph graph;
  std::vector<NodeSet> blocks;
};

GeneratedGraph Generate(const std::string& spec, std::uint64_t rng_seed) {
  const auto tok = Tokens(spec);
  if (tok.empty()) BadConfig("empty generator");
  if (tok[0] == "chain") {
    if (tok.size() < 3) BadConfig("usage: chain <n> <weight> [<index>:<weight> ...]");
    std::vector<WeightOverride> overrides;
    for (std::size_t k = 3; k < tok.size(); ++k) {
      const auto colon = tok[k].find(':');
      if (colon == std::string::npos) BadConfig("override must be <index>:<weight>");
      overrides.push_back({ParseValue<std::size_t>("override", tok[k].substr(0, colon)),
                           ParseValue<double>("override", tok[k].substr(colon + 1))});
    }
    return {ChainGraph(ParseValue<std::size_t>("chain n", tok[1]),
                       ParseValue<double>("chain weight", tok[2]), overrides),
            {}};
  }
  if (tok[0] == "sbm") {
    if (tok.size() != 4) BadConfig("usage: sbm <size>,<size>,... <p_in> <p_out>");
    SbmSpec spec;
    std::istringstream sizes(tok[1]);
    for (std::string s; std::getline(sizes, s, ',');) {
      spec.block_sizes.push_back(ParseValue<std::size_t>("block size", s));
    }
    spec.p_in = ParseValue<double>("p_in", tok[2]);
    spec.p_out = ParseValue<double>("p_out", tok[3]);
    spec.rng_seed = rng_seed;
    SbmGraph sbm = MakeSbmGraph(spec);
    return {std::move(sbm.graph), std::move(sbm.blocks)};
  }
  BadConfig("unknown generator '" + tok[0] + "'");
}

std::string Render(const io::KeyValues& kv) {
  std::ostringstream out;
  kv.Write(out);
  return out.str();
}

std::string RenderCsv(std::span<const double> x) {
  std::ostringstream out;
  io::WriteSignalCsv(out, x);
  return out.str();
}

std::string RenderNodeSet(const NodeSet& s) {
  std::ostringstream out;
  io::WriteNodeSet(out, s);
  return out.str();
}

void PrepareOutDir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

// Runs the solver and writes signal.csv, cluster.txt and certificates.txt.
struct Solved {
  SolverResult result;
  ClusterResult cluster;
};

Solved SolveAndWrite(const NLassoProblem& p, std::size_t iters, double threshold, int workers,
                     const std::filesystem::path& dir, std::optional<std::size_t> u = {}) {
  SolverConfig cfg(iters);
  cfg.set_workers(workers);
  Solved s{Run(p, cfg), {}};
  s.cluster = ExtractCluster(p, s.result.x, threshold);
  io::WriteFile(dir / "signal.csv", RenderCsv(s.result.x));
  io::WriteFile(dir / "cluster.txt", RenderNodeSet(s.cluster.cluster));
  io::WriteFile(dir / "certificates.txt", Render(CertificateReport(p, s.result, s.cluster, u)));
  return s;
}

}  // namespace

RunManifest ManifestFromKeyValues(const io::KeyValues& kv) {
  static const std::set<std::string> kKnown = {"graph", "generator", "seeds", "seed_count",
                                               "alpha", "lambda", "iters", "threshold",
                                               "out", "rng_seed", "workers"};
  for (const auto& [k, v] : kv.entries()) {
    if (!kKnown.count(k)) BadConfig("unknown manifest key '" + k + "'");
  }
  RunManifest m;
  auto str = [&](const char* key, std::string& dst) {
    if (kv.Has(key)) dst = kv.Get(key);
  };
  str("graph", m.graph_path);
  str("generator", m.generator);
  str("seeds", m.seeds_path);
  if (kv.Has("out")) m.out_dir = kv.Get("out");
  if (kv.Has("seed_count")) m.seed_count = ParseValue<std::size_t>("seed_count", kv.Get("seed_count"));
  if (kv.Has("alpha")) m.alpha = ParseValue<double>("alpha", kv.Get("alpha"));
  if (kv.Has("lambda")) m.lambda = ParseValue<double>("lambda", kv.Get("lambda"));
  if (kv.Has("iters")) m.max_iters = ParseValue<std::size_t>("iters", kv.Get("iters"));
  if (kv.Has("threshold")) m.threshold = ParseValue<double>("threshold", kv.Get("threshold"));
  if (kv.Has("rng_seed")) m.rng_seed = ParseValue<std::uint64_t>("rng_seed", kv.Get("rng_seed"));
  if (kv.Has("workers")) m.workers = ParseValue<int>("workers", kv.Get("workers"));
  return m;
}

void ValidateManifest(const RunManifest& m) {
  if (!(m.alpha > 0.0) || !std::isfinite(m.alpha)) BadConfig("alpha must be > 0");
  if (!(m.lambda > 0.0) || !std::isfinite(m.lambda)) BadConfig("lambda must be > 0");
  if (m.max_iters < 1) BadConfig("iters must be >= 1");
  if (m.workers < 0) BadConfig("workers must be >= 0");
  if (m.graph_path.empty() == m.generator.empty()) {
    BadConfig("give exactly one of graph or generator");
  }
  if (m.seeds_path.empty() == (m.seed_count == 0)) {
    BadConfig("give exactly one of seeds or seed_count");
  }
}

io::KeyValues CertificateReport(const NLassoProblem& p, const SolverResult& r,
                                const ClusterResult& c, std::optional<std::size_t> u) {
  io::KeyValues kv;
  kv.Set("iterations", r.iters_run);
  kv.Set("alpha", p.alpha());
  kv.Set("lambda", p.lambda());
  kv.Set("threshold", c.threshold);
  kv.Set("cluster_size", c.cluster.size());
  kv.Set("contains_seeds", c.contains_seeds);
  kv.Set("primal_objective", PrimalObjective(p, r.x));
  kv.Set("duality_gap", DualityGap(p, r.x, r.y).value());

  const KKTReport kkt = KKTResiduals(p, r.x, r.y);
  kv.Set("kkt.seed_demand_residual", kkt.seed_demand_residual);
  kv.Set("kkt.nonseed_demand_residual", kkt.nonseed_demand_residual);
  kv.Set("kkt.capacity_ok", kkt.capacity_ok);
  kv.Set("kkt.nonsaturated_jump", kkt.nonsaturated_jump);
  kv.Set("kkt.eps_sat", kkt.eps_sat);

  kv.Set("prop1.boundary_weight", BoundaryWeight(p.graph(), c.cluster));
  if (c.contains_seeds) {
    const Prop1Report prop = Prop1Check(p, c, r.x);
    kv.Set("prop1.lhs", prop.lhs);
    kv.Set("prop1.rhs_injecting", prop.rhs_injecting);
    kv.Set("prop1.rhs_absorbing", prop.rhs_absorbing);
    kv.Set("prop1.holds_injecting", prop.holds_injecting);
    kv.Set("prop1.holds_absorbing", prop.holds_absorbing);
  } else {
    kv.Set("prop1.status", "seeds_outside_cluster");
  }
  if (u) {
    kv.Set("ubound.U", *u);
    kv.Set("ubound.rhs", static_cast<double>(*u) * p.alpha() / 2.0);
    kv.Set("ubound.holds", UBoundCheck(p, c, *u));
  }
  return kv;
}

int CmdSolve(const RunManifest& m, std::ostream& err) {
  return Guarded(err, [&] {
    ValidateManifest(m);
    GeneratedGraph gen = m.generator.empty()
                             ? GeneratedGraph{io::ReadEdgeListFile(m.graph_path), {}}
                             : Generate(m.generator, m.rng_seed);
    const std::size_t n = gen.graph.node_count();
    NodeSet seeds;
    if (!m.seeds_path.empty()) {
      seeds = io::ReadNodeSetFile(m.seeds_path, n);
    } else {
      if (gen.blocks.empty()) BadConfig("seed_count needs the sbm generator");
      seeds = SampleSeeds(gen.blocks.front(), m.seed_count, m.rng_seed, n);
    }
    const NLassoProblem p(std::move(gen.graph), std::move(seeds), m.alpha, m.lambda);
    PrepareOutDir(m.out_dir);
    SolveAndWrite(p, m.max_iters, m.threshold, m.workers, m.out_dir);
  });
}

int CmdChainExperiment(const ChainOptions& opt, std::ostream& err) {
  return Guarded(err, [&] {
    const WeightOverride boundary{4, 1.0};
    Graph g = ChainGraph(kChainNodes, 5.0 / 4.0, std::span(&boundary, 1));
    const NodeSignal fiedler =
        FiedlerVector(g, LaplacianMode::kSymmetricNormalized, kFiedlerTol, kFiedlerMaxIters);
    const NLassoProblem p(std::move(g), NodeSet({1}, kChainNodes), 1.0 / 200.0, 2.0 / 10.0);

    PrepareOutDir(opt.out_dir);
    const Solved s =
        SolveAndWrite(p, opt.max_iters, kDefaultThreshold, opt.workers, opt.out_dir, kChainUBound);
    const std::span<const double> x(s.result.x);
    io::WriteFile(opt.out_dir / "nLassoChain.csv", RenderCsv(x.first(kChainPlotNodes)));
    io::WriteFile(opt.out_dir / "FiedlerChain.csv",
                  RenderCsv(std::span<const double>(fiedler).first(kChainPlotNodes)));
  });
}

double LabelingAccuracy(const NodeSet& cluster, const NodeSet& block, std::size_t n) {
  const auto in_cluster = cluster.mask(n);
  const auto in_block = block.mask(n);
  std::size_t agree = 0;
  for (std::size_t k = 0; k < n; ++k) agree += in_cluster[k] == in_block[k];
  return static_cast<double>(agree) / static_cast<double>(n);
}

int CmdSbmExperiment(const SbmOptions& opt, std::ostream& err) {
  return Guarded(err, [&] {
    SbmSpec spec{{opt.block_size, opt.block_size}, opt.p_in, opt.p_out, opt.rng_seed};
    SbmGraph sbm = MakeSbmGraph(spec);
    const std::size_t n = sbm.graph.node_count();
    const NodeSet block = sbm.blocks.front();
    NodeSet seeds = SampleSeeds(block, opt.seed_count, opt.rng_seed, n);
    const std::size_t edges = sbm.graph.edge_count();
    const NLassoProblem p(std::move(sbm.graph), std::move(seeds), opt.alpha, opt.lambda);

    PrepareOutDir(opt.out_dir);
    const Solved s = SolveAndWrite(p, opt.max_iters, opt.threshold, opt.workers, opt.out_dir);
    io::KeyValues report;
    report.Set("rng_seed", std::to_string(opt.rng_seed));
    report.Set("nodes", n);
    report.Set("edges", edges);
    report.Set("seeds", p.seeds().size());
    report.Set("cluster_size", s.cluster.cluster.size());
    report.Set("accuracy", LabelingAccuracy(s.cluster.cluster, block, n));
    io::WriteFile(opt.out_dir / "sbm_report.txt", Render(report));
  });
}

int CmdSegment(const SegmentOptions& opt, std::ostream& err) {
  return Guarded(err, [&] {
    const GreyImage img = io::ReadPgmFile(opt.image_path);
    Graph g = GridFromImage(img, opt.sigma);
    const std::size_t n = g.node_count();
    NodeSet seeds = io::ReadNodeSetFile(opt.seeds_path, n);
    const NLassoProblem p(std::move(g), std::move(seeds), opt.alpha, opt.lambda);

    PrepareOutDir(opt.out_dir);
    const Solved s = SolveAndWrite(p, opt.max_iters, opt.threshold, opt.workers, opt.out_dir);
    GreyImage mask{img.width, img.height, std::vector<std::uint8_t>(n, 0)};
    for (NodeId i : s.cluster.cluster.ids()) mask.pixels[i - 1] = 255;
    std::ostringstream pgm;
    io::WritePgm(pgm, mask);
    io::WriteFile(opt.out_dir / "mask.pgm", pgm.str());
  });
}

int Main(int argc, char** argv) {
  CLI::App app{"Local graph clustering with the network Lasso"};
  app.require_subcommand(1);

  RunManifest m;
  std::string manifest_path;
  std::string out_dir;
  auto* solve = app.add_subcommand("solve", "Solve one instance from an edge list or generator");
  solve->add_option("--manifest", manifest_path, "key = value run manifest");
  auto* o_graph = solve->add_option("--graph", m.graph_path, "edge-list file");
  auto* o_gen = solve->add_option("--generator", m.generator, "graph generator spec");
  auto* o_seeds = solve->add_option("--seeds", m.seeds_path, "seed node file");
  auto* o_count = solve->add_option("--seed-count", m.seed_count, "seeds drawn from SBM block 1");
  auto* o_alpha = solve->add_option("--alpha", m.alpha);
  auto* o_lambda = solve->add_option("--lambda", m.lambda);
  auto* o_iters = solve->add_option("--iters", m.max_iters);
  auto* o_thr = solve->add_option("--threshold", m.threshold);
  auto* o_workers = solve->add_option("--workers", m.workers, "0 = all cores");
  auto* o_rng = solve->add_option("--rng-seed", m.rng_seed);
  auto* o_out = solve->add_option("--out", out_dir);

  ChainOptions chain;
  auto* chain_cmd = app.add_subcommand("chain", "Reproduce the 100-node chain experiment");
  chain_cmd->add_option("--out", chain.out_dir);
  chain_cmd->add_option("--workers", chain.workers, "0 = all cores");
  chain_cmd->add_option("--iters", chain.max_iters);

  SbmOptions sbm;
  auto* sbm_cmd = app.add_subcommand("sbm", "Two-block stochastic block model experiment");
  sbm_cmd->add_option("--out", sbm.out_dir);
  sbm_cmd->add_option("--rng-seed", sbm.rng_seed);
  sbm_cmd->add_option("--workers", sbm.workers, "0 = all cores");
  sbm_cmd->add_option("--block-size", sbm.block_size);
  sbm_cmd->add_option("--p-in", sbm.p_in);
  sbm_cmd->add_option("--p-out", sbm.p_out);
  sbm_cmd->add_option("--seed-count", sbm.seed_count);
  sbm_cmd->add_option("--alpha", sbm.alpha);
  sbm_cmd->add_option("--lambda", sbm.lambda);
  sbm_cmd->add_option("--iters", sbm.max_iters);
  sbm_cmd->add_option("--threshold", sbm.threshold);

  SegmentOptions seg;
  auto* seg_cmd = app.add_subcommand("segment", "Segment a greyscale PGM image around seeds");
  seg_cmd->add_option("--image", seg.image_path)->required();
  seg_cmd->add_option("--seeds", seg.seeds_path)->required();
  seg_cmd->add_option("--out", seg.out_dir);
  seg_cmd->add_option("--alpha", seg.alpha);
  seg_cmd->add_option("--lambda", seg.lambda);
  seg_cmd->add_option("--iters", seg.max_iters);
  seg_cmd->add_option("--sigma", seg.sigma);
  seg_cmd->add_option("--threshold", seg.threshold);
  seg_cmd->add_option("--workers", seg.workers, "0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (solve->parsed()) {
    if (!manifest_path.empty()) {
      // Flags given on the command line take precedence over the manifest.
      const RunManifest cli = m;
      const int rc = Guarded(std::cerr, [&] {
        std::ifstream in(manifest_path);
        if (!in) throw Error(ErrorKind::kMalformedInput, "cannot open " + manifest_path);
        m = ManifestFromKeyValues(io::KeyValues::Parse(in));
      });
      if (rc != kExitOk) return rc;
      if (o_graph->count()) m.graph_path = cli.graph_path;
      if (o_gen->count()) m.generator = cli.generator;
      if (o_seeds->count()) m.seeds_path = cli.seeds_path;
      if (o_count->count()) m.seed_count = cli.seed_count;
      if (o_alpha->count()) m.alpha = cli.alpha;
      if (o_lambda->count()) m.lambda = cli.lambda;
      if (o_iters->count()) m.max_iters = cli.max_iters;
      if (o_thr->count()) m.threshold = cli.threshold;
      if (o_workers->count()) m.workers = cli.workers;
      if (o_rng->count()) m.rng_seed = cli.rng_seed;
    }
    if (o_out->count()) m.out_dir = out_dir;
    return CmdSolve(m, std::cerr);
  }
  if (chain_cmd->parsed()) return CmdChainExperiment(chain, std::cerr);
  if (sbm_cmd->parsed()) return CmdSbmExperiment(sbm, std::cerr);
  return CmdSegment(seg, std::cerr);
}

}  // namespace nlasso::cli
