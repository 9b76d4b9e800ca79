// Copyright 2026 The subdisc Authors
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

#include "subdisc/tree_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace subdisc {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' &&
                              *ptr != '\r')) {
      parse_fail(line_no, "expected integers, got '" + std::string(line) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

// Palette for colours 1..12; larger colours wrap.
constexpr std::array<const char*, 12> kPalette = {
    "red",    "forestgreen", "blue",  "orange", "purple", "cyan",
    "brown",  "magenta",     "gold",  "gray40", "navy",   "olivedrab"};

}  // namespace

Tree parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::vector<long long>>> rows;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    rows.emplace_back(line_no, parse_ints(line, line_no));
  }
  if (rows.empty()) parse_fail(line_no, "missing header 'n m'");
  const auto& [header_line, header] = rows.front();
  if (header.size() != 2) parse_fail(header_line, "header must be 'n m'");
  const long long n = header[0];
  const long long m = header[1];
  if (n < 2 || m < 1) parse_fail(header_line, "need n >= 2 and m >= 1");
  if (static_cast<long long>(rows.size()) - 1 != m) {
    parse_fail(rows.back().first, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& [ln, values] = rows[i];
    if (values.size() != 2) parse_fail(ln, "edge line must be 'u v'");
    if (values[0] < 0 || values[1] < 0 || values[0] >= n || values[1] >= n) {
      parse_fail(ln, "vertex out of range 0.." + std::to_string(n - 1));
    }
    edges.push_back({static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1])});
  }
  return Tree::from_edges(static_cast<int>(n), std::move(edges));
}

std::string emit_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.vertex_count() << ' ' << t.edge_count() << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string emit_dot(const Tree& t, std::span<const int> colours,
                     std::span<const std::uint8_t> orientation) {
  if (!colours.empty() && static_cast<int>(colours.size()) != t.edge_count()) {
    fail(ErrorKind::LengthMismatch, "colouring length differs from edge count");
  }
  if (!orientation.empty() && static_cast<int>(orientation.size()) != t.edge_count()) {
    fail(ErrorKind::LengthMismatch, "orientation length differs from edge count");
  }
  const bool directed = !orientation.empty();
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " T {\n  node [shape=circle];\n";
  for (EdgeId i = 0; i < t.edge_count(); ++i) {
    Edge e = t.edge(i);
    if (directed && orientation[i]) std::swap(e.u, e.v);
    out << "  " << e.u << (directed ? " -> " : " -- ") << e.v << " [label=\"e" << i;
    if (!colours.empty()) {
      out << " c" << colours[i] << "\", color=\""
          << kPalette[static_cast<std::size_t>(colours[i] - 1) % kPalette.size()];
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace subdisc
