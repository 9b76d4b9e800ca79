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

#include "subdisc/oriented.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "subdisc/imbalance.hpp"
#include "subdisc/subtree_dp.hpp"

namespace subdisc {

Orientation::Orientation(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) fail(ErrorKind::ParamOutOfRange, "orientation bits must be 0 or 1");
  }
}

Orientation Orientation::flipped() const {
  std::vector<std::uint8_t> out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ^ 1U;
  return Orientation(std::move(out));
}

namespace {

void check_size(const Tree& t, const Orientation& o) {
  if (o.size() != t.edge_count()) {
    fail(ErrorKind::LengthMismatch, "orientation has " + std::to_string(o.size()) +
                                        " bits for " + std::to_string(t.edge_count()) + " edges");
  }
}

// +1 when traversing e from `from` agrees with its orientation; sign flips the
// sense. Unassigned edges (mask given and zero) are excluded.
struct DirectionWeight {
  const Tree* t;
  const Orientation* o;
  int sign;
  std::span<const std::uint8_t> assigned = {};

  std::int64_t operator()(EdgeId e, Vertex from, Vertex) const {
    if (!assigned.empty() && !assigned[static_cast<std::size_t>(e)]) {
      return excluded_weight<std::int64_t>();
    }
    return o->leaves(*t, e, from) ? sign : -sign;
  }
};

void set_direction(const Tree& t, std::vector<std::uint8_t>& bits, EdgeId e, Vertex from) {
  bits[static_cast<std::size_t>(e)] = t.edge(e).u == from ? 0 : 1;
}

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

RootedWitness star_witness(const Tree& t, const Orientation& o) {
  Vertex centre = 0;
  while (t.degree(centre) == 1) ++centre;
  std::vector<EdgeId> away;
  std::vector<EdgeId> toward;
  for (const Incidence& inc : t.neighbours(centre)) {
    (o.leaves(t, inc.edge, centre) ? away : toward).push_back(inc.edge);
  }
  const auto bound = static_cast<std::size_t>(ceil_half(t.leaf_count()) + 1);
  // The majority side rooted at the centre, or, one short of the bound, the
  // majority side plus one minority edge rooted at that edge's leaf.
  std::vector<EdgeId>& major = away.size() >= toward.size() ? away : toward;
  std::vector<EdgeId>& minor = away.size() >= toward.size() ? toward : away;
  RootedWitness w;
  w.edge_ids = major;
  w.root = centre;
  if (major.size() < bound && !minor.empty()) {
    const EdgeId extra = *std::min_element(minor.begin(), minor.end());
    w.edge_ids.push_back(extra);
    w.root = t.edge(extra).other(centre);
  }
  std::sort(w.edge_ids.begin(), w.edge_ids.end());
  w.value = rooted_value(t, o, w.edge_ids, w.root);
  return w;
}

std::vector<Vertex> vertices_of(const Tree& t, std::span<const EdgeId> edges, Vertex fallback) {
  std::vector<Vertex> out;
  for (EdgeId e : edges) {
    out.push_back(t.edge(e).u);
    out.push_back(t.edge(e).v);
  }
  if (out.empty()) out.push_back(fallback);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Candidate {
  std::vector<EdgeId> edges;
  Vertex root;
};

// Colour edges red when they point towards `centre` and return the
// red-dominant subtree of maximum two-colour imbalance, flipping the
// orientation first when blue dominates every maximum. `flip` reports that.
std::vector<EdgeId> dominant_subtree(const Tree& t, const Orientation& o, Vertex centre, bool& flip,
                                     Vertex& anchor) {
  const Rooting rooting = root_at(t, centre);
  std::vector<int> colours(static_cast<std::size_t>(t.edge_count()));
  for (Vertex x = 0; x < t.vertex_count(); ++x) {
    const EdgeId e = rooting.parent_edge[x];
    if (e < 0) continue;
    colours[e] = o.leaves(t, e, x) ? 1 : 2;
  }
  const Colouring two(2, colours);
  const SubtreeWitness best = max_imbalance(t, two);
  flip = best.colour == 2;
  anchor = best.anchor;
  return best.edge_ids;
}

void add_candidates(const Tree& t, std::span<const EdgeId> edges, Vertex anchor,
                    std::vector<Candidate>& out) {
  const std::vector<Vertex> inside = vertices_of(t, edges, anchor);
  std::vector<char> member(static_cast<std::size_t>(t.vertex_count()), 0);
  for (Vertex x : inside) member[x] = 1;
  std::vector<EdgeId> base(edges.begin(), edges.end());
  for (Vertex x : inside) out.push_back({base, x});
  for (Vertex x : inside) {
    for (const Incidence& inc : t.neighbours(x)) {
      if (member[inc.neighbour]) continue;
      std::vector<EdgeId> grown = base;
      grown.push_back(inc.edge);
      std::sort(grown.begin(), grown.end());
      out.push_back({grown, x});
      out.push_back({std::move(grown), inc.neighbour});
    }
  }
}

}  // namespace

OrientedProfiles oriented_profiles(const Tree& t, const Orientation& o) {
  check_size(t, o);
  auto away = subtree_tables<std::int64_t>(t, DirectionWeight{&t, &o, 1});
  auto toward = subtree_tables<std::int64_t>(t, DirectionWeight{&t, &o, -1});
  return {std::move(away.full), std::move(toward.full)};
}

OrientedProfiles partial_oriented_profiles(const Tree& t, const Orientation& o,
                                           std::span<const std::uint8_t> assigned) {
  check_size(t, o);
  auto away = subtree_tables<std::int64_t>(t, DirectionWeight{&t, &o, 1, assigned});
  auto toward = subtree_tables<std::int64_t>(t, DirectionWeight{&t, &o, -1, assigned});
  return {std::move(away.full), std::move(toward.full)};
}

std::int64_t rooted_value(const Tree& t, const Orientation& o, std::span<const EdgeId> edges,
                          Vertex root) {
  check_size(t, o);
  std::vector<char> in_set(static_cast<std::size_t>(t.edge_count()), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= t.edge_count()) fail(ErrorKind::BadEdgeIndex, "edge " + std::to_string(e));
    in_set[e] = 1;
  }
  std::int64_t sum = 0;
  std::size_t reached = 0;
  std::vector<std::pair<Vertex, Vertex>> stack = {{root, -1}};
  while (!stack.empty()) {
    auto [x, from] = stack.back();
    stack.pop_back();
    for (const Incidence& inc : t.neighbours(x)) {
      if (inc.neighbour == from || !in_set[inc.edge]) continue;
      sum += o.leaves(t, inc.edge, x) ? 1 : -1;
      ++reached;
      stack.emplace_back(inc.neighbour, x);
    }
  }
  if (reached != edges.size()) {
    fail(ErrorKind::DisconnectedSubtree, "edges do not form a subtree through the root");
  }
  return std::abs(sum);
}

RootedWitness oriented_imbalance(const Tree& t, const Orientation& o) {
  check_size(t, o);
  const DirectionWeight away_w{&t, &o, 1};
  const DirectionWeight toward_w{&t, &o, -1};
  auto away = subtree_tables<std::int64_t>(t, away_w);
  auto toward = subtree_tables<std::int64_t>(t, toward_w);
  Vertex root = 0;
  bool use_toward = false;
  std::int64_t best = -1;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (away.full[v] > best) {
      best = away.full[v];
      root = v;
      use_toward = false;
    }
    if (toward.full[v] > best) {
      best = toward.full[v];
      root = v;
      use_toward = true;
    }
  }
  RootedWitness w;
  w.root = root;
  w.edge_ids = use_toward ? collect_subtree(t, toward, toward_w, root)
                          : collect_subtree(t, away, away_w, root);
  w.value = rooted_value(t, o, w.edge_ids, root);
  return w;
}

Orientation orient_tree(const Tree& t) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(t.edge_count()), 0);
  std::vector<std::uint8_t> assigned(bits.size(), 0);
  std::vector<char> grown(static_cast<std::size_t>(t.vertex_count()), 0);
  const std::vector<Vertex> leaves = t.leaves();

  Vertex x = leaves[0];
  grown[x] = 1;
  const std::vector<EdgeId> base = path_between(t, leaves[0], leaves[1]);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Vertex next = t.edge(base[i]).other(x);
    set_direction(t, bits, base[i], i % 2 == 0 ? x : next);
    assigned[base[i]] = 1;
    grown[next] = 1;
    x = next;
  }

  const Rooting rooting = root_at(t, leaves[0]);
  for (std::size_t li = 2; li < leaves.size(); ++li) {
    std::vector<EdgeId> path;
    Vertex anchor = leaves[li];
    while (!grown[anchor]) {
      path.push_back(rooting.parent_edge[anchor]);
      anchor = rooting.parent[anchor];
    }
    std::reverse(path.begin(), path.end());

    const Orientation current(bits);
    const auto away = best_through<std::int64_t>(t, DirectionWeight{&t, &current, 1, assigned}, anchor);
    const auto toward =
        best_through<std::int64_t>(t, DirectionWeight{&t, &current, -1, assigned}, anchor);
    const bool first_inward = !(toward < away);

    Vertex prev = anchor;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex next = t.edge(path[i]).other(prev);
      const bool inward = (i % 2 == 0) == first_inward;
      set_direction(t, bits, path[i], inward ? next : prev);
      assigned[path[i]] = 1;
      grown[next] = 1;
      prev = next;
    }
  }
  return Orientation(std::move(bits));
}

std::int64_t star_oriented_discrepancy(int leaves) {
  if (leaves < 2) fail(ErrorKind::ParamOutOfRange, "star needs at least 2 leaves");
  return ceil_half(leaves) + 1;
}

RootedWitness oriented_lower_bound_witness(const Tree& t, const Orientation& o) {
  check_size(t, o);
  if (t.vertex_count() < 3) fail(ErrorKind::TooSmall, "need at least 3 vertices");
  const std::int64_t bound = ceil_half(t.leaf_count()) + 1;
  RootedWitness found;
  if (t.is_star()) {
    found = star_witness(t, o);
  } else {
    // u: a non-leaf with a non-leaf neighbour v.
    Vertex u = -1;
    Vertex v = -1;
    EdgeId uv = -1;
    for (Vertex x = 0; x < t.vertex_count() && u < 0; ++x) {
      if (t.degree(x) == 1) continue;
      for (const Incidence& inc : t.neighbours(x)) {
        if (t.degree(inc.neighbour) > 1) {
          u = x;
          v = inc.neighbour;
          uv = inc.edge;
          break;
        }
      }
    }

    // All moves are evaluated against `work`, which is `o` or its global flip;
    // rooted values are invariant under the flip.
    bool flip = false;
    Vertex anchor = u;
    std::vector<Candidate> candidates;
    const std::vector<EdgeId> best = dominant_subtree(t, o, u, flip, anchor);
    const Orientation work = flip ? o.flipped() : o;
    add_candidates(t, best, anchor, candidates);

    // Contract uv, find the dominant subtree in the contracted tree and lift it back.
    const Contraction c = contract(t, uv);
    std::vector<std::uint8_t> bits1(static_cast<std::size_t>(c.tree.edge_count()));
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      if (c.edge_map[e] >= 0) bits1[c.edge_map[e]] = work[e];
    }
    bool flip1 = false;
    Vertex anchor1 = c.vertex_map[u];
    const std::vector<EdgeId> best1 =
        dominant_subtree(c.tree, Orientation(bits1), c.vertex_map[u], flip1, anchor1);
    std::vector<EdgeId> lifted;
    bool touches_merged = anchor1 == c.vertex_map[u];
    std::vector<EdgeId> inverse(static_cast<std::size_t>(c.tree.edge_count()));
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      if (c.edge_map[e] >= 0) inverse[c.edge_map[e]] = e;
    }
    for (EdgeId e1 : best1) {
      const Edge& ed = c.tree.edge(e1);
      touches_merged = touches_merged || ed.u == c.vertex_map[u] || ed.v == c.vertex_map[u];
      lifted.push_back(inverse[e1]);
    }
    if (touches_merged) lifted.push_back(uv);
    std::sort(lifted.begin(), lifted.end());
    if (touches_merged) {
      // Dominant colour blue -> root at v, red -> root at u.
      candidates.push_back({lifted, flip1 ? v : u});
      candidates.push_back({lifted, flip1 ? u : v});
    }
    if (!lifted.empty() && is_connected_edge_set(t, lifted)) {
      add_candidates(t, lifted, touches_merged ? u : t.edge(lifted[0]).u, candidates);
    }

    found.value = -1;
    for (const Candidate& cand : candidates) {
      if (!is_connected_edge_set(t, cand.edges)) continue;
      const std::int64_t value = rooted_value(t, work, cand.edges, cand.root);
      if (value >= bound) {
        found = {cand.edges, cand.root, value};
        break;
      }
    }
    if (found.value < bound) {
      std::cerr << "oriented_lower_bound_witness: guided moves fell short; using global maximum\n";
      found = oriented_imbalance(t, o);
    }
  }
  found.value = rooted_value(t, o, found.edge_ids, found.root);
  if (found.value < bound) {
    throw std::logic_error("oriented lower-bound witness below ceil(l/2)+1");
  }
  return found;
}

Orientation parse_orientation(std::string_view text) {
  std::vector<std::uint8_t> bits;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    if (first != last || (line[first] != '0' && line[first] != '1')) {
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 0 or 1");
    }
    bits.push_back(static_cast<std::uint8_t>(line[first] - '0'));
  }
  return Orientation(std::move(bits));
}

std::string emit_orientation(const Orientation& o) {
  std::ostringstream out;
  for (std::uint8_t b : o.bits()) out << static_cast<int>(b) << '\n';
  return out.str();
}

}  // namespace subdisc
