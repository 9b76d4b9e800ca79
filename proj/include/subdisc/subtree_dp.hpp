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

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "subdisc/tree.hpp"

namespace subdisc {

// Weight that keeps an edge out of every optimal subtree.
template <class W>
constexpr W excluded_weight() {
  if constexpr (std::numeric_limits<W>::has_infinity) {
    return -std::numeric_limits<W>::infinity();
  } else {
    return std::numeric_limits<W>::lowest() / 4;
  }
}

// Max-weight connected subtree tables for every vertex at once (rerooting).
//
// The weight of traversing edge e from `from` to `to` is weight(e, from, to),
// so direction-dependent weights (rooted orientations) and symmetric ones
// (colour weights) share the kernel. The empty subtree counts with value 0.
//
//   down[v]: best subtree containing v inside v's branch (rooted at `root`)
//   up[v]:   best subtree containing parent(v) that avoids v's branch
//   full[v]: best subtree containing v anywhere in the tree
template <class W>
struct SubtreeTables {
  Rooting rooting;
  std::vector<W> down;
  std::vector<W> up;
  std::vector<W> full;

  // Best value of a subtree hanging from `from` through the neighbour `to`,
  // not counting the connecting edge.
  W branch(Vertex from, Vertex to) const {
    return rooting.parent[to] == from ? down[to] : up[from];
  }
};

template <class W, class WeightFn>
SubtreeTables<W> subtree_tables(const Tree& t, WeightFn&& weight, Vertex root = 0) {
  const auto n = static_cast<std::size_t>(t.vertex_count());
  SubtreeTables<W> tab{root_at(t, root), std::vector<W>(n, W{}), std::vector<W>(n, W{}),
                       std::vector<W>(n, W{})};
  const auto& order = tab.rooting.order;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const Vertex p = tab.rooting.parent[v];
    if (p < 0) continue;
    const EdgeId e = tab.rooting.parent_edge[v];
    tab.down[p] += std::max(W{}, weight(e, p, v) + tab.down[v]);
  }
  tab.full[root] = tab.down[root];
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vertex v = order[i];
    const Vertex p = tab.rooting.parent[v];
    const EdgeId e = tab.rooting.parent_edge[v];
    tab.up[v] = tab.full[p] - std::max(W{}, weight(e, p, v) + tab.down[v]);
    tab.full[v] = tab.down[v] + std::max(W{}, weight(e, v, p) + tab.up[v]);
  }
  return tab;
}

// Down pass only: best subtree containing `root`. O(m).
template <class W, class WeightFn>
W best_through(const Tree& t, WeightFn&& weight, Vertex root) {
  const Rooting r = root_at(t, root);
  std::vector<W> down(static_cast<std::size_t>(t.vertex_count()), W{});
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const Vertex v = *it;
    const Vertex p = r.parent[v];
    if (p < 0) continue;
    down[p] += std::max(W{}, weight(r.parent_edge[v], p, v) + down[v]);
  }
  return down[root];
}

// Reconstructs the subtree behind tab.full[anchor]: every branch with strictly
// positive gain is taken, zero-gain branches are left out. Sorted edge ids.
template <class W, class WeightFn>
std::vector<EdgeId> collect_subtree(const Tree& t, const SubtreeTables<W>& tab, WeightFn&& weight,
                                    Vertex anchor) {
  std::vector<EdgeId> edges;
  std::vector<std::pair<Vertex, Vertex>> stack = {{anchor, -1}};
  while (!stack.empty()) {
    auto [x, from] = stack.back();
    stack.pop_back();
    for (const Incidence& inc : t.neighbours(x)) {
      if (inc.neighbour == from) continue;
      const W gain = weight(inc.edge, x, inc.neighbour) + tab.branch(x, inc.neighbour);
      if (gain > W{}) {
        edges.push_back(inc.edge);
        stack.emplace_back(inc.neighbour, x);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace subdisc
