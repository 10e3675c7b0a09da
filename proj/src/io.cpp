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

#include "nlasso/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "nlasso/error.hpp"

namespace nlasso::io {

namespace {

[[noreturn]] void Malformed(const std::string& what, std::size_t line) {
  throw Error(ErrorKind::kMalformedInput,
              line > 0 ? "line " + std::to_string(line) + ": " + what : what);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on blanks and tabs.
std::vector<std::string_view> Fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

template <typename T>
bool ParseNumber(std::string_view s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

NodeId ParseNodeId(std::string_view s, std::size_t line) {
  unsigned long long v = 0;
  if (!ParseNumber(s, v) || v == 0 || v > 0xffffffffULL) {
    Malformed("bad node id '" + std::string(s) + "'", line);
  }
  return static_cast<NodeId>(v);
}

std::ifstream OpenForRead(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ifstream in(path, std::ios::in | mode);
  if (!in) throw Error(ErrorKind::kMalformedInput, "cannot open " + path.string());
  return in;
}

// Next whitespace-delimited header token of a PGM, skipping '#' comments.
std::string PgmToken(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      if (!tok.empty()) break;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

std::size_t PgmNumber(std::istream& in, const char* what) {
  const std::string tok = PgmToken(in);
  std::size_t v = 0;
  if (tok.empty() || !ParseNumber(std::string_view(tok), v)) {
    Malformed(std::string("PGM: bad ") + what + " '" + tok + "'", 0);
  }
  return v;
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, ptr);
}

Graph ReadEdgeList(std::istream& in, std::size_t n) {
  std::vector<EdgeInput> edges;
  std::size_t max_id = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = Trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto f = Fields(s);
    if (f.size() != 3) Malformed("expected 'i j w'", line);
    EdgeInput e{ParseNodeId(f[0], line), ParseNodeId(f[1], line), 0.0};
    if (!ParseNumber(f[2], e.weight)) Malformed("bad weight '" + std::string(f[2]) + "'", line);
    max_id = std::max<std::size_t>({max_id, e.i, e.j});
    edges.push_back(e);
  }
  if (n == 0) n = max_id;
  if (n == 0) Malformed("edge list is empty", 0);
  return Graph::Build(n, edges);
}

Graph ReadEdgeListFile(const std::filesystem::path& path, std::size_t n) {
  std::ifstream in = OpenForRead(path);
  return ReadEdgeList(in, n);
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) {
    out << e.tail << ' ' << e.head << ' ' << FormatDouble(e.weight) << '\n';
  }
}

NodeSet ReadNodeSet(std::istream& in, std::size_t n) {
  std::vector<NodeId> ids;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = Trim(raw);
    if (s.empty() || s.front() == '#') continue;
    ids.push_back(ParseNodeId(s, line));
  }
  return NodeSet(std::move(ids), n);
}

NodeSet ReadNodeSetFile(const std::filesystem::path& path, std::size_t n) {
  std::ifstream in = OpenForRead(path);
  return ReadNodeSet(in, n);
}

void WriteNodeSet(std::ostream& out, const NodeSet& s) {
  for (NodeId i : s.ids()) out << i << '\n';
}

GreyImage ReadPgm(std::istream& in) {
  const std::string magic = PgmToken(in);
  if (magic != "P2" && magic != "P5") Malformed("PGM: unknown magic '" + magic + "'", 0);
  GreyImage img;
  img.width = PgmNumber(in, "width");
  img.height = PgmNumber(in, "height");
  const std::size_t maxval = PgmNumber(in, "maxval");
  if (img.width == 0 || img.height == 0) Malformed("PGM: empty image", 0);
  if (maxval == 0 || maxval > 255) Malformed("PGM: maxval must be in 1..255", 0);

  const std::size_t count = img.width * img.height;
  img.pixels.resize(count);
  if (magic == "P5") {
    // Exactly one whitespace byte separates maxval from the raster; the
    // token reader has already consumed it.
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) Malformed("PGM: truncated raster", 0);
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t v = PgmNumber(in, "pixel");
      if (v > maxval) Malformed("PGM: pixel exceeds maxval", 0);
      img.pixels[k] = static_cast<std::uint8_t>(v);
    }
  }
  for (std::uint8_t& p : img.pixels) {
    if (p > maxval) Malformed("PGM: pixel exceeds maxval", 0);
    // Rescale to the 0..255 range the grid weights are defined on.
    if (maxval != 255) p = static_cast<std::uint8_t>((p * 255 + maxval / 2) / maxval);
  }
  return img;
}

GreyImage ReadPgmFile(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path, std::ios::binary);
  return ReadPgm(in);
}

void WritePgm(std::ostream& out, const GreyImage& img) {
  out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
}

void WriteSignalCsv(std::ostream& out, std::span<const double> x) {
  out << "i,x\n";
  for (std::size_t k = 0; k < x.size(); ++k) out << (k + 1) << ',' << FormatDouble(x[k]) << '\n';
}

void KeyValues::Set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

void KeyValues::Set(const std::string& key, double value) { Set(key, FormatDouble(value)); }

void KeyValues::Set(const std::string& key, bool value) {
  Set(key, std::string(value ? "true" : "false"));
}

void KeyValues::Set(const std::string& key, std::size_t value) {
  Set(key, std::to_string(value));
}

bool KeyValues::Has(const std::string& key) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& kv) { return kv.first == key; });
}

const std::string& KeyValues::Get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw Error(ErrorKind::kMalformedInput, "missing key '" + key + "'");
}

void KeyValues::Write(std::ostream& out) const {
  for (const auto& [k, v] : entries_) out << k << " = " << v << '\n';
}

KeyValues KeyValues::Parse(std::istream& in) {
  KeyValues kv;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = Trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) Malformed("expected 'key = value'", line);
    const std::string_view key = Trim(s.substr(0, eq));
    if (key.empty()) Malformed("empty key", line);
    kv.Set(std::string(key), std::string(Trim(s.substr(eq + 1))));
  }
  return kv;
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace nlasso::io
