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

// Text and image file formats. Readers throw Error(kMalformedInput) with the
// offending line number; writers use LF line endings and shortest
// round-trip decimals.

#ifndef NLASSO_IO_HPP_
#define NLASSO_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlasso/generators.hpp"
#include "nlasso/graph.hpp"

namespace nlasso::io {

// Shortest decimal that parses back to the same double ("0.2", "1e-06").
std::string FormatDouble(double v);

// Edge list: one `i j w` per line, '#' starts a comment line, blank lines
// skipped. The node count is the largest id seen unless `n` is given.
Graph ReadEdgeList(std::istream& in, std::size_t n = 0);
Graph ReadEdgeListFile(const std::filesystem::path& path, std::size_t n = 0);
void WriteEdgeList(std::ostream& out, const Graph& g);

// One node id per line; '#' comments allowed.
NodeSet ReadNodeSet(std::istream& in, std::size_t n);
NodeSet ReadNodeSetFile(const std::filesystem::path& path, std::size_t n);
void WriteNodeSet(std::ostream& out, const NodeSet& s);

// PGM, ASCII (P2) or binary (P5), maxval <= 255, '#' comments in the header.
GreyImage ReadPgm(std::istream& in);
GreyImage ReadPgmFile(const std::filesystem::path& path);
// Binary P5 with maxval 255.
void WritePgm(std::ostream& out, const GreyImage& img);

// Header `i,x`, then one row per node.
void WriteSignalCsv(std::ostream& out, std::span<const double> x);

// Flat `key = value` text. Keys keep insertion order on output.
class KeyValues {
 public:
  void Set(const std::string& key, const std::string& value);
  void Set(const std::string& key, double value);
  void Set(const std::string& key, bool value);
  void Set(const std::string& key, std::size_t value);
  void Set(const std::string& key, const char* value) { Set(key, std::string(value)); }

  bool Has(const std::string& key) const;
  const std::string& Get(const std::string& key) const;
  std::span<const std::pair<std::string, std::string>> entries() const { return entries_; }

  void Write(std::ostream& out) const;
  // Blank lines and '#' comments skipped; a repeated key overwrites.
  static KeyValues Parse(std::istream& in);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Writes `contents` to `path` byte for byte. Throws std::runtime_error if the
// file cannot be written.
void WriteFile(const std::filesystem::path& path, const std::string& contents);

}  // namespace nlasso::io

#endif  // NLASSO_IO_HPP_
