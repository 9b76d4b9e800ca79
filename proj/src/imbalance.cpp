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

#include "subdisc/imbalance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "subdisc/subtree_dp.hpp"

namespace subdisc {

Colouring::Colouring(int r, std::vector<int> assignment) : r_(r), assignment_(std::move(assignment)) {
  if (r_ < 2) fail(ErrorKind::ParamOutOfRange, "need at least 2 colours");
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] < 1 || assignment_[i] > r_) {
      fail(ErrorKind::BadColour, "edge " + std::to_string(i) + " has colour " +
                                     std::to_string(assignment_[i]) + " outside 1.." +
                                     std::to_string(r_));
    }
  }
}

std::int64_t ColourProfile::max() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

namespace {

void check_size(const Tree& t, const Colouring& c) {
  if (c.size() != t.edge_count()) {
    fail(ErrorKind::LengthMismatch, "colouring has " + std::to_string(c.size()) +
                                        " entries for " + std::to_string(t.edge_count()) + " edges");
  }
}

// Per-edge weight r*[colour == j] - 1, or its negation.
struct ColourWeight {
  std::span<const int> colours;
  int r;
  int j;
  int sign = 1;

  std::int64_t operator()(EdgeId e, Vertex, Vertex) const {
    const int c = colours[static_cast<std::size_t>(e)];
    return sign * (c == j ? r - 1 : -1);
  }
};

struct PartialColourWeight {
  std::span<const int> colours;
  int r;
  int j;

  std::int64_t operator()(EdgeId e, Vertex, Vertex) const {
    const int c = colours[static_cast<std::size_t>(e)];
    if (c == 0) return excluded_weight<std::int64_t>();
    return c == j ? r - 1 : -1;
  }
};

SubtreeWitness best_over_colours(const Tree& t, const Colouring& c, bool both_signs) {
  SubtreeWitness best;
  bool have = false;
  for (int sign : {1, -1}) {
    if (sign < 0 && !both_signs) break;
    for (int j = 1; j <= c.colours(); ++j) {
      ColourWeight w{c.assignment(), c.colours(), j, sign};
      auto tab = subtree_tables<std::int64_t>(t, w);
      Vertex anchor = 0;
      for (Vertex v = 1; v < t.vertex_count(); ++v) {
        if (tab.full[v] > tab.full[anchor]) anchor = v;
      }
      const std::int64_t value = tab.full[anchor];
      const bool better = !have || value > best.value ||
                          (value == best.value && anchor < best.anchor);
      if (better) {
        have = true;
        best.value = value;
        best.anchor = anchor;
        best.colour = j;
        best.deficit = sign < 0;
        best.edge_ids = collect_subtree(t, tab, w, anchor);
      }
    }
  }
  return best;
}

}  // namespace

bool is_connected_edge_set(const Tree& t, std::span<const EdgeId> edges) {
  if (edges.empty()) return true;
  std::vector<Vertex> parent(static_cast<std::size_t>(t.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> touched(static_cast<std::size_t>(t.vertex_count()), 0);
  std::vector<char> used(static_cast<std::size_t>(t.edge_count()), 0);
  int vertices = 0;
  int merges = 0;
  for (EdgeId e : edges) {
    if (e < 0 || e >= t.edge_count()) fail(ErrorKind::BadEdgeIndex, "edge " + std::to_string(e));
    if (used[e]) return false;
    used[e] = 1;
    const Edge& ed = t.edge(e);
    for (Vertex x : {ed.u, ed.v}) {
      if (!touched[x]) {
        touched[x] = 1;
        ++vertices;
      }
    }
    Vertex a = find(ed.u);
    Vertex b = find(ed.v);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  return merges == vertices - 1;
}

std::int64_t weight(const Tree& t, const Colouring& c, std::span<const EdgeId> subtree, int colour) {
  check_size(t, c);
  if (colour < 1 || colour > c.colours()) {
    fail(ErrorKind::BadColour, "colour " + std::to_string(colour) + " outside 1.." +
                                   std::to_string(c.colours()));
  }
  if (!is_connected_edge_set(t, subtree)) {
    fail(ErrorKind::DisconnectedSubtree, "edge set is not a connected subtree");
  }
  std::int64_t hits = 0;
  for (EdgeId e : subtree) hits += c[e] == colour;
  return c.colours() * hits - static_cast<std::int64_t>(subtree.size());
}

ColourProfile profile(const Tree& t, const Colouring& c, Vertex v) {
  check_size(t, c);
  ColourProfile out;
  out.values.reserve(static_cast<std::size_t>(c.colours()));
  for (int j = 1; j <= c.colours(); ++j) {
    out.values.push_back(best_through<std::int64_t>(t, ColourWeight{c.assignment(), c.colours(), j}, v));
  }
  return out;
}

ColourProfile partial_profile(const Tree& t, int r, std::span<const int> colours, Vertex v) {
  ColourProfile out;
  out.values.reserve(static_cast<std::size_t>(r));
  for (int j = 1; j <= r; ++j) {
    out.values.push_back(best_through<std::int64_t>(t, PartialColourWeight{colours, r, j}, v));
  }
  return out;
}

std::vector<ColourProfile> all_profiles(const Tree& t, const Colouring& c) {
  check_size(t, c);
  const auto n = static_cast<std::size_t>(t.vertex_count());
  std::vector<ColourProfile> out(n);
  for (auto& p : out) p.values.resize(static_cast<std::size_t>(c.colours()));
  for (int j = 1; j <= c.colours(); ++j) {
    auto tab = subtree_tables<std::int64_t>(t, ColourWeight{c.assignment(), c.colours(), j});
    for (std::size_t v = 0; v < n; ++v) out[v].values[static_cast<std::size_t>(j - 1)] = tab.full[v];
  }
  return out;
}

SubtreeWitness max_imbalance(const Tree& t, const Colouring& c) {
  check_size(t, c);
  return best_over_colours(t, c, false);
}

SubtreeWitness symmetric_max_imbalance(const Tree& t, const Colouring& c) {
  check_size(t, c);
  return best_over_colours(t, c, true);
}

WeightedSubtree max_weight_subtree(const Tree& t, std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != t.edge_count()) {
    fail(ErrorKind::LengthMismatch, "one weight per edge expected");
  }
  for (double w : weights) {
    if (!std::isfinite(w)) fail(ErrorKind::NonFiniteWeight, "edge weights must be finite");
  }
  auto w = [weights](EdgeId e, Vertex, Vertex) { return weights[static_cast<std::size_t>(e)]; };
  auto tab = subtree_tables<double>(t, w);
  Vertex anchor = 0;
  for (Vertex v = 1; v < t.vertex_count(); ++v) {
    if (tab.full[v] > tab.full[anchor]) anchor = v;
  }
  WeightedSubtree out;
  out.anchor = anchor;
  out.edge_ids = collect_subtree(t, tab, w, anchor);
  for (EdgeId e : out.edge_ids) out.value += weights[static_cast<std::size_t>(e)];
  return out;
}

Colouring parse_colouring(std::string_view text, int r) {
  std::vector<int> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + first, line.data() + last + 1, value);
    if (ec != std::errc() || ptr != line.data() + last + 1) {
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected one colour");
    }
    values.push_back(value);
  }
  return Colouring(r, std::move(values));
}

std::string emit_colouring(const Colouring& c) {
  std::ostringstream out;
  for (int x : c.assignment()) out << x << '\n';
  return out.str();
}

}  // namespace subdisc
