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

#include <sstream>

#include "nlasso/io.hpp"
#include "test_util.hpp"

using namespace nlasso;
using testutil::KindOf;

TEST_CASE("shortest decimals") {
  CHECK(io::FormatDouble(0.2) == "0.2");
  CHECK(io::FormatDouble(1e-6) == "1e-06");
  CHECK(io::FormatDouble(1.0) == "1");
  CHECK(io::FormatDouble(5.0 / 4.0) == "1.25");
}

TEST_CASE("edge list round trip") {
  std::istringstream in("# chain\n1 2 1.25\n\n3 2 0.5\n  # indented comment\n");
  const Graph g = io::ReadEdgeList(in);
  CHECK(g == BuildGraph(3, {{1, 2, 1.25}, {2, 3, 0.5}}));
  std::ostringstream out;
  io::WriteEdgeList(out, g);
  CHECK(out.str() == "1 2 1.25\n2 3 0.5\n");
  std::istringstream back(out.str());
  CHECK(io::ReadEdgeList(back, 5).node_count() == 5);
}

TEST_CASE("edge list errors carry the line") {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      io::ReadEdgeList(in);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("1 2 1\n1 x 1\n").find("line 2") != std::string::npos);
  CHECK(message("1 2\n").find("line 1") != std::string::npos);
  CHECK(message("0 2 1\n").find("line 1") != std::string::npos);
  CHECK(message("1 2 1.5x\n").find("line 1") != std::string::npos);
  CHECK(message("").find("empty") != std::string::npos);
  std::istringstream dup("1 2 1\n2 1 1\n");
  CHECK(KindOf([&] { io::ReadEdgeList(dup); }) == ErrorKind::kDuplicateEdge);
  CHECK(KindOf([] { io::ReadEdgeListFile("/nonexistent/graph.txt"); }) ==
        ErrorKind::kMalformedInput);
}

TEST_CASE("node sets") {
  std::istringstream in("# seeds\n3\n1\n");
  const NodeSet s = io::ReadNodeSet(in, 4);
  CHECK(s == NodeSet({1, 3}, 4));
  std::ostringstream out;
  io::WriteNodeSet(out, s);
  CHECK(out.str() == "1\n3\n");
  std::istringstream bad("5\n");
  CHECK(KindOf([&] { io::ReadNodeSet(bad, 4); }) == ErrorKind::kInvalidNode);
}

TEST_CASE("PGM") {
  std::istringstream p2("P2\n# comment\n3 2\n255\n0 10 20\n30 40 255\n");
  const GreyImage a = io::ReadPgm(p2);
  CHECK(a.width == 3);
  CHECK(a.height == 2);
  CHECK(a.pixels == std::vector<std::uint8_t>{0, 10, 20, 30, 40, 255});

  std::ostringstream out;
  io::WritePgm(out, a);
  std::istringstream p5(out.str());
  const GreyImage b = io::ReadPgm(p5);
  CHECK(b.pixels == a.pixels);
  CHECK(out.str().substr(0, 11) == "P5\n3 2\n255\n");

  std::istringstream small("P2 2 1 15 0 15");
  CHECK(io::ReadPgm(small).pixels == std::vector<std::uint8_t>{0, 255});

  for (const char* bad : {"P3\n1 1\n255\n0\n", "P2\n2 1\n255\n0\n", "P2\n2 1\n300\n0 0\n",
                          "P2\n2 1\n10\n0 11\n", "P5\n4 1\n255\nab", "P2\n0 1\n255\n",
                          "P2\nx 1\n255\n0\n"}) {
    std::istringstream in(bad);
    CAPTURE(bad);
    CHECK(KindOf([&] { io::ReadPgm(in); }) == ErrorKind::kMalformedInput);
  }
}

TEST_CASE("signal CSV") {
  std::ostringstream out;
  io::WriteSignalCsv(out, std::vector<double>{0.5, 1e-06, -2.0});
  CHECK(out.str() == "i,x\n1,0.5\n2,1e-06\n3,-2\n");
}

TEST_CASE("key values") {
  io::KeyValues kv;
  kv.Set("alpha", 0.005);
  kv.Set("holds", true);
  kv.Set("count", std::size_t{4});
  kv.Set("name", "chain");
  kv.Set("alpha", 0.25);
  std::ostringstream out;
  kv.Write(out);
  CHECK(out.str() == "alpha = 0.25\nholds = true\ncount = 4\nname = chain\n");

  std::istringstream in("# manifest\n alpha = 0.1 \n\nout=dir x\n");
  const io::KeyValues parsed = io::KeyValues::Parse(in);
  CHECK(parsed.Get("alpha") == "0.1");
  CHECK(parsed.Get("out") == "dir x");
  CHECK_FALSE(parsed.Has("lambda"));
  CHECK(KindOf([&] { parsed.Get("lambda"); }) == ErrorKind::kMalformedInput);
  std::istringstream bad("novalue\n");
  CHECK(KindOf([&] { io::KeyValues::Parse(bad); }) == ErrorKind::kMalformedInput);
}
