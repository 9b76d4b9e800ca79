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

#include "subdisc/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace subdisc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::Cyclic: return "Cyclic";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IsPath: return "IsPath";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::BadEdgeIndex: return "BadEdgeIndex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DisconnectedSubtree: return "DisconnectedSubtree";
    case ErrorKind::BadColour: return "BadColour";
    case ErrorKind::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NonUnitDirection: return "NonUnitDirection";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

std::pair<Vertex, Vertex> key(const Edge& e) { return std::minmax(e.u, e.v); }

}  // namespace

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  incidences_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    incidences_[fill[e.u]++] = {e.v, i};
    incidences_[fill[e.v]++] = {e.u, i};
  }
}

Tree Tree::from_edges(int n, std::vector<Edge> edges) {
  if (edges.empty()) fail(ErrorKind::ParamOutOfRange, "a tree needs at least one edge");
  if (n < 2) fail(ErrorKind::ParamOutOfRange, "a tree needs at least two vertices");
  std::set<std::pair<Vertex, Vertex>> seen;
  DisjointSets sets(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string where = "edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ")";
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      fail(ErrorKind::ParamOutOfRange, where + " has a vertex outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) fail(ErrorKind::SelfLoop, where + " is a loop");
    if (!seen.insert(key(e)).second) fail(ErrorKind::DuplicateEdge, where + " repeats an earlier edge");
    if (!sets.unite(e.u, e.v)) fail(ErrorKind::Cyclic, where + " closes a cycle");
  }
  if (static_cast<int>(edges.size()) != n - 1) {
    fail(ErrorKind::Disconnected, std::to_string(n) + " vertices but only " +
                                      std::to_string(edges.size()) + " edges");
  }
  return Tree(n, std::move(edges));
}

Tree Tree::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return from_edges(n, std::move(edges));
}

Tree Tree::from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (pairs.empty()) fail(ErrorKind::ParamOutOfRange, "empty edge list");
  Vertex top = 0;
  for (auto [a, b] : pairs) top = std::max({top, a, b});
  return from_edge_list(top + 1, pairs);
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

int Tree::leaf_count() const {
  int count = 0;
  for (Vertex v = 0; v < n_; ++v) count += degree(v) == 1;
  return count;
}

bool Tree::is_path() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (degree(v) > 2) return false;
  }
  return true;
}

bool Tree::is_star() const {
  if (n_ < 3) return false;
  int internal = 0;
  for (Vertex v = 0; v < n_; ++v) internal += degree(v) > 1;
  return internal == 1;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) fail(ErrorKind::ParamOutOfRange, "graph needs a vertex");
  adjacency_.resize(static_cast<std::size_t>(n_));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (EdgeId i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      fail(ErrorKind::ParamOutOfRange, "graph edge " + std::to_string(i) + " out of range");
    }
    if (e.u == e.v) fail(ErrorKind::SelfLoop, "graph edge " + std::to_string(i) + " is a loop");
    if (!seen.insert(key(e)).second) {
      fail(ErrorKind::DuplicateEdge, "graph edge " + std::to_string(i) + " is parallel");
    }
    adjacency_[e.u].push_back({e.v, i});
    adjacency_[e.v].push_back({e.u, i});
  }
}

int Graph::min_degree() const {
  int best = n_ > 0 ? degree(0) : 0;
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::connected() const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : adjacency_[x]) {
      if (!seen[inc.neighbour]) {
        seen[inc.neighbour] = 1;
        ++reached;
        stack.push_back(inc.neighbour);
      }
    }
  }
  return reached == n_;
}

PathToAnchor branching_path(const Tree& t, Vertex leaf) {
  if (leaf < 0 || leaf >= t.vertex_count() || t.degree(leaf) != 1) {
    fail(ErrorKind::ParamOutOfRange, "vertex " + std::to_string(leaf) + " is not a leaf");
  }
  std::vector<EdgeId> walk;
  Vertex prev = -1;
  Vertex cur = leaf;
  while (true) {
    Incidence step{-1, -1};
    for (const Incidence& inc : t.neighbours(cur)) {
      if (inc.neighbour != prev) {
        step = inc;
        break;
      }
    }
    walk.push_back(step.edge);
    prev = cur;
    cur = step.neighbour;
    if (t.degree(cur) >= 3) break;
    if (t.degree(cur) == 1) fail(ErrorKind::IsPath, "tree has no vertex of degree >= 3");
  }
  std::reverse(walk.begin(), walk.end());
  return {leaf, cur, std::move(walk)};
}

Rooting root_at(const Tree& t, Vertex root) {
  const auto n = static_cast<std::size_t>(t.vertex_count());
  Rooting r;
  r.order.reserve(n);
  r.parent.assign(n, -1);
  r.parent_edge.assign(n, -1);
  std::vector<char> seen(n, 0);
  r.order.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    Vertex x = r.order[head];
    for (const Incidence& inc : t.neighbours(x)) {
      if (seen[inc.neighbour]) continue;
      seen[inc.neighbour] = 1;
      r.parent[inc.neighbour] = x;
      r.parent_edge[inc.neighbour] = inc.edge;
      r.order.push_back(inc.neighbour);
    }
  }
  return r;
}

std::vector<EdgeId> path_between(const Tree& t, Vertex a, Vertex b) {
  Rooting r = root_at(t, b);
  std::vector<EdgeId> out;
  for (Vertex x = a; x != b; x = r.parent[x]) out.push_back(r.parent_edge[x]);
  return out;
}

namespace family {

Tree path(int n) {
  if (n < 2) fail(ErrorKind::ParamOutOfRange, "path needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Tree::from_edges(n, std::move(edges));
}

Tree star(int leaves) {
  if (leaves < 2) fail(ErrorKind::ParamOutOfRange, "star needs at least 2 leaves");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Tree::from_edges(leaves + 1, std::move(edges));
}

Tree spider(int leg_length, int leaves) {
  if (leg_length < 1 || leaves < 2) {
    fail(ErrorKind::ParamOutOfRange, "spider needs leg length >= 1 and >= 2 legs");
  }
  std::vector<Edge> edges;
  for (int leg = 0; leg < leaves; ++leg) {
    Vertex prev = 0;
    for (int h = 0; h < leg_length; ++h) {
      Vertex next = 1 + leg * leg_length + h;
      edges.push_back({prev, next});
      prev = next;
    }
  }
  return Tree::from_edges(1 + leg_length * leaves, std::move(edges));
}

Tree caterpillar(int spine, int legs) {
  if (spine < 1 || legs < 0 || spine * (1 + legs) < 2) {
    fail(ErrorKind::ParamOutOfRange, "caterpillar needs spine >= 1, legs >= 0 and two vertices");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
  Vertex next = spine;
  for (Vertex i = 0; i < spine; ++i) {
    for (int j = 0; j < legs; ++j) edges.push_back({i, next++});
  }
  return Tree::from_edges(next, std::move(edges));
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 2) fail(ErrorKind::ParamOutOfRange, "random tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& x : code) x = pick(rng);
  return prufer_decode(code, n);
}

}  // namespace family

Tree prufer_decode(std::span<const int> sequence, int n) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2) {
    fail(ErrorKind::ParamOutOfRange, "Prufer sequence must have length n-2");
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) fail(ErrorKind::ParamOutOfRange, "Prufer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : sequence) {
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      do {
        ++ptr;
      } while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  edges.push_back({std::min(leaf, n - 1), std::max(leaf, n - 1)});
  return Tree::from_edges(n, std::move(edges));
}

std::vector<int> prufer_encode(const Tree& t) {
  const int n = t.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) degree[v] = t.degree(v);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<int> code;
  for (int step = 0; step < n - 2; ++step) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    removed[leaf] = 1;
    for (const Incidence& inc : t.neighbours(leaf)) {
      if (removed[inc.neighbour]) continue;
      code.push_back(inc.neighbour);
      if (--degree[inc.neighbour] == 1) leaves.insert(inc.neighbour);
    }
  }
  return code;
}

Graph grid_plus(int rows, int cols) {
  if (rows < 2 || cols < 2) fail(ErrorKind::ParamOutOfRange, "grid needs both sides >= 2");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  const auto base = static_cast<EdgeId>(edges.size());
  // For a 2-wide side the corner pair is already adjacent; pair across instead.
  if (cols > 2) {
    edges.push_back({id(0, 0), id(0, cols - 1)});
    edges.push_back({id(rows - 1, 0), id(rows - 1, cols - 1)});
  } else if (rows > 2) {
    edges.push_back({id(0, 0), id(rows - 1, 0)});
    edges.push_back({id(0, cols - 1), id(rows - 1, cols - 1)});
  } else {
    edges.push_back({id(0, 0), id(1, 1)});
    edges.push_back({id(0, 1), id(1, 0)});
  }
  Graph g(rows * cols, std::move(edges));
  g.added_edges = {base, base + 1};
  return g;
}

namespace {

// Working spanning tree for the greedy and the edge swaps.
class SpanningBuilder {
 public:
  explicit SpanningBuilder(const Graph& g)
      : g_(g),
        in_tree_(static_cast<std::size_t>(g.vertex_count()), 0),
        degree_(static_cast<std::size_t>(g.vertex_count()), 0),
        used_(static_cast<std::size_t>(g.edge_count()), 0) {}

  int outside(Vertex x) const {
    int count = 0;
    for (const Incidence& inc : g_.adjacency()[x]) count += !in_tree_[inc.neighbour];
    return count;
  }

  void seed(Vertex x) {
    in_tree_[x] = 1;
    ++size_;
  }

  void attach(Vertex x, const Incidence& inc) {
    in_tree_[inc.neighbour] = 1;
    ++size_;
    used_[inc.edge] = 1;
    ++degree_[x];
    ++degree_[inc.neighbour];
    order_.push_back(inc.edge);
  }

  void expand(Vertex x) {
    for (const Incidence& inc : g_.adjacency()[x]) {
      if (!in_tree_[inc.neighbour]) attach(x, inc);
    }
  }

  bool greedy_step() {
    const int n = g_.vertex_count();
    Vertex best = -1;
    int best_out = 1;
    for (Vertex x = 0; x < n; ++x) {
      if (!in_tree_[x] || degree_[x] > 1) continue;
      int out = outside(x);
      if (out > best_out) {
        best_out = out;
        best = x;
      }
    }
    if (best >= 0) {
      expand(best);
      return true;
    }
    // A leaf with one outside neighbour y is worth expanding together with y
    // when y then brings in at least two new leaves.
    Vertex via = -1;
    Incidence target{-1, -1};
    int target_out = 1;
    for (Vertex x = 0; x < n; ++x) {
      if (!in_tree_[x] || degree_[x] > 1 || outside(x) != 1) continue;
      for (const Incidence& inc : g_.adjacency()[x]) {
        if (in_tree_[inc.neighbour]) continue;
        int out = outside(inc.neighbour);
        if (out > target_out) {
          target_out = out;
          via = x;
          target = inc;
        }
      }
    }
    if (via < 0) return false;
    attach(via, target);
    expand(target.neighbour);
    return true;
  }

  void connect_rest() {
    const int n = g_.vertex_count();
    while (size_ < n) {
      Vertex from = -1;
      Incidence pick{-1, -1};
      for (Vertex x = 0; x < n && from < 0; ++x) {
        if (!in_tree_[x] || degree_[x] < 2) continue;
        for (const Incidence& inc : g_.adjacency()[x]) {
          if (!in_tree_[inc.neighbour]) {
            from = x;
            pick = inc;
            break;
          }
        }
      }
      for (Vertex x = 0; x < n && from < 0; ++x) {
        if (!in_tree_[x]) continue;
        for (const Incidence& inc : g_.adjacency()[x]) {
          if (!in_tree_[inc.neighbour]) {
            from = x;
            pick = inc;
            break;
          }
        }
      }
      attach(from, pick);
    }
  }

  int leaf_count() const {
    return static_cast<int>(std::count(degree_.begin(), degree_.end(), 1));
  }

  // Applies the first edge swap found that increases the leaf count.
  bool improve() {
    const int n = g_.vertex_count();
    std::vector<std::vector<Incidence>> adj(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (!used_[e]) continue;
      const Edge& ed = g_.edges()[e];
      adj[ed.u].push_back({ed.v, e});
      adj[ed.v].push_back({ed.u, e});
    }
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n));
    for (EdgeId add = 0; add < g_.edge_count(); ++add) {
      if (used_[add]) continue;
      const Edge& ea = g_.edges()[add];
      std::fill(parent.begin(), parent.end(), -2);
      parent[ea.v] = -1;
      std::deque<Vertex> queue = {ea.v};
      while (!queue.empty() && parent[ea.u] == -2) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const Incidence& inc : adj[x]) {
          if (parent[inc.neighbour] != -2) continue;
          parent[inc.neighbour] = x;
          parent_edge[inc.neighbour] = inc.edge;
          queue.push_back(inc.neighbour);
        }
      }
      for (Vertex x = ea.u; parent[x] != -1; x = parent[x]) {
        const EdgeId drop = parent_edge[x];
        const Edge& ed = g_.edges()[drop];
        std::map<Vertex, int> delta;
        ++delta[ea.u];
        ++delta[ea.v];
        --delta[ed.u];
        --delta[ed.v];
        int gain = 0;
        for (auto [vertex, change] : delta) {
          const int before = degree_[vertex];
          const int after = before + change;
          gain += (after == 1) - (before == 1);
        }
        if (gain > 0) {
          for (auto [vertex, change] : delta) degree_[vertex] += change;
          used_[add] = 1;
          used_[drop] = 0;
          std::replace(order_.begin(), order_.end(), drop, add);
          return true;
        }
      }
    }
    return false;
  }

  Tree build() const {
    std::vector<Edge> edges;
    edges.reserve(order_.size());
    for (EdgeId e : order_) edges.push_back(g_.edges()[e]);
    return Tree::from_edges(g_.vertex_count(), std::move(edges));
  }

 private:
  const Graph& g_;
  std::vector<char> in_tree_;
  std::vector<int> degree_;
  std::vector<char> used_;
  std::vector<EdgeId> order_;
  int size_ = 0;
};

}  // namespace

Tree leafy_spanning_tree(const Graph& g) {
  if (g.vertex_count() < 2) fail(ErrorKind::ParamOutOfRange, "graph needs two vertices");
  if (!g.connected()) fail(ErrorKind::Disconnected, "graph is not connected");
  SpanningBuilder builder(g);
  Vertex start = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) > g.degree(start)) start = v;
  }
  builder.seed(start);
  builder.expand(start);
  while (builder.greedy_step()) {
  }
  builder.connect_rest();
  // Target n/4 + 2 leaves, rounded up.
  const int target = (g.vertex_count() + 3) / 4 + 2;
  while (builder.leaf_count() < target && builder.improve()) {
  }
  return builder.build();
}

Contraction contract(const Tree& t, EdgeId e) {
  if (e < 0 || e >= t.edge_count()) {
    fail(ErrorKind::BadEdgeIndex, "edge " + std::to_string(e) + " does not exist");
  }
  if (t.vertex_count() < 3) fail(ErrorKind::TooSmall, "contracting a single edge leaves no tree");
  const Edge gone = t.edge(e);
  const int n = t.vertex_count();
  std::vector<Vertex> vmap(static_cast<std::size_t>(n));
  for (Vertex x = 0, next = 0; x < n; ++x) {
    if (x == gone.v) continue;
    vmap[x] = next++;
  }
  vmap[gone.v] = vmap[gone.u];
  std::vector<Edge> edges;
  std::vector<EdgeId> emap(static_cast<std::size_t>(t.edge_count()), -1);
  for (EdgeId i = 0; i < t.edge_count(); ++i) {
    if (i == e) continue;
    emap[i] = static_cast<EdgeId>(edges.size());
    edges.push_back({vmap[t.edge(i).u], vmap[t.edge(i).v]});
  }
  return {Tree::from_edges(n - 1, std::move(edges)), std::move(vmap), std::move(emap)};
}

}  // namespace subdisc
