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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "subdisc/error.hpp"

namespace subdisc {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  Vertex neighbour;
  EdgeId edge;
};

// Undirected tree on vertices 0..n-1. Edges keep their input order and endpoint
// order; both are part of the identity of colourings and orientations, which
// are stored as flat per-edge sequences.
class Tree {
 public:
  // n is inferred as 1 + the largest vertex id.
  static Tree from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs);
  static Tree from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Tree from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> neighbours(Vertex v) const {
    return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::vector<Vertex> leaves() const;
  int leaf_count() const;
  bool is_path() const;
  // n >= 3 and exactly one vertex has degree > 1.
  bool is_star() const;

  bool operator==(const Tree& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  Tree(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Incidence> incidences_;
};

// Simple undirected graph; only used as input to spanning-tree extraction.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const std::vector<std::vector<Incidence>>& adjacency() const { return adjacency_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int min_degree() const;
  bool connected() const;

  // Edge indices that were added on top of a base graph (grid_plus corner matching).
  std::vector<EdgeId> added_edges;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// The path from a leaf to its branching vertex (nearest vertex of degree >= 3).
// edge_ids run from the anchor outward to the leaf.
struct PathToAnchor {
  Vertex leaf;
  Vertex anchor;
  std::vector<EdgeId> edge_ids;
};

PathToAnchor branching_path(const Tree& t, Vertex leaf);

// BFS rooting. order[0] == root; parent[root] == -1; parent_edge[root] == -1.
struct Rooting {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  std::vector<EdgeId> parent_edge;
};

Rooting root_at(const Tree& t, Vertex root);

// Edge ids on the unique a-b path, ordered from a towards b.
std::vector<EdgeId> path_between(const Tree& t, Vertex a, Vertex b);

namespace family {

Tree path(int n);
// Centre is vertex 0.
Tree star(int leaves);
// Root 0 with `leaves` legs of `leg_length` edges each; leg i occupies vertices
// 1 + i*leg_length .. (i+1)*leg_length, listed from the root outward.
Tree spider(int leg_length, int leaves);
// Spine 0..spine-1; each spine vertex carries `legs` pendant vertices.
Tree caterpillar(int spine, int legs);
// Uniform over the n^(n-2) labelled trees (Prufer sequence drawn from
// std::mt19937_64 seeded with `seed`).
Tree random_tree(int n, std::uint64_t seed);

}  // namespace family

Tree prufer_decode(std::span<const int> sequence, int n);
std::vector<int> prufer_encode(const Tree& t);

// m x n grid (vertex r*n + c) plus the matching ((0,0),(0,n-1)), ((m-1,0),(m-1,n-1)).
Graph grid_plus(int rows, int cols);

// Spanning tree grown by greedy leafy expansion followed by leaf-increasing
// edge swaps. On inputs with minimum degree >= 3 the swaps continue until the
// tree has at least n/4 + 2 leaves or no swap helps.
Tree leafy_spanning_tree(const Graph& g);

struct Contraction {
  Tree tree;
  std::vector<Vertex> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_map;    // old edge -> new edge, -1 for the contracted edge
};

// Merges the second endpoint of e into the first. Surviving edges keep their
// relative order and endpoint order.
Contraction contract(const Tree& t, EdgeId e);

}  // namespace subdisc
