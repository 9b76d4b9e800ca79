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
#include <string>
#include <string_view>
#include <vector>

#include "subdisc/tree.hpp"

namespace subdisc {

// bits[e] == 0: edge e points from its stored first endpoint to its second.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<std::uint8_t> bits);

  int size() const { return static_cast<int>(bits_.size()); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::uint8_t operator[](EdgeId e) const { return bits_[static_cast<std::size_t>(e)]; }

  // Whether edge e (with endpoint `from`) points from `from` to its other end.
  bool leaves(const Tree& t, EdgeId e, Vertex from) const {
    return (t.edge(e).u == from) == (bits_[static_cast<std::size_t>(e)] == 0);
  }

  Orientation flipped() const;
  bool operator==(const Orientation&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct RootedWitness {
  std::vector<EdgeId> edge_ids;  // sorted
  Vertex root = 0;
  std::int64_t value = 0;  // |agreements - disagreements|
};

// away[v]: best (agreements - disagreements) over subtrees rooted at v;
// toward[v]: best (disagreements - agreements). Both are >= 0.
struct OrientedProfiles {
  std::vector<std::int64_t> away;
  std::vector<std::int64_t> toward;
};

OrientedProfiles oriented_profiles(const Tree& t, const Orientation& o);

// Same on the subforest of edges with assigned[e] != 0.
OrientedProfiles partial_oriented_profiles(const Tree& t, const Orientation& o,
                                           std::span<const std::uint8_t> assigned);

// Recomputes |agreements - disagreements| for `edges` rooted at `root` from
// scratch. Throws DisconnectedSubtree unless the edges form a subtree through root.
std::int64_t rooted_value(const Tree& t, const Orientation& o, std::span<const EdgeId> edges,
                          Vertex root);

// Max over roots v and subtrees through v; ties go to the smallest root,
// preferring the away side.
RootedWitness oriented_imbalance(const Tree& t, const Orientation& o);

// Alternating base path between the two smallest leaves; each further leaf path
// alternates starting with the edge at its attachment vertex b pointing into b,
// reversed when toward[b] < away[b]. Guarantees away[v] + toward[v] <= leaves.
Orientation orient_tree(const Tree& t);

std::int64_t star_oriented_discrepancy(int leaves);  // ceil(l/2) + 1

// A rooted subtree of value >= ceil(l/2) + 1 for any orientation of a tree on
// at least 3 vertices, found by a guided search over the moves of the
// two-colouring argument (falls back to the global maximum, logging to stderr).
RootedWitness oriented_lower_bound_witness(const Tree& t, const Orientation& o);

// Orientation file: one 0/1 per line, in edge order.
Orientation parse_orientation(std::string_view text);
std::string emit_orientation(const Orientation& o);

}  // namespace subdisc
