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

// Edge colouring with colours 1..r, indexed by edge id.
class Colouring {
 public:
  Colouring(int r, std::vector<int> assignment);

  int colours() const { return r_; }
  int size() const { return static_cast<int>(assignment_.size()); }
  int operator[](EdgeId e) const { return assignment_[static_cast<std::size_t>(e)]; }
  std::span<const int> assignment() const { return assignment_; }

  bool operator==(const Colouring&) const = default;

 private:
  int r_;
  std::vector<int> assignment_;
};

// chi(v;T): values[j-1] is the largest colour-j weight of a subtree through v.
struct ColourProfile {
  std::vector<std::int64_t> values;

  int colours() const { return static_cast<int>(values.size()); }
  std::int64_t max() const;
  bool operator==(const ColourProfile&) const = default;
};

struct SubtreeWitness {
  std::vector<EdgeId> edge_ids;  // sorted; empty means the single vertex `anchor`
  Vertex anchor = 0;
  int colour = 1;
  std::int64_t value = 0;
  // Set when the witness realises -w_j (colour j under-represented).
  bool deficit = false;
};

struct WeightedSubtree {
  double value = 0.0;
  std::vector<EdgeId> edge_ids;
  Vertex anchor = 0;
};

bool is_connected_edge_set(const Tree& t, std::span<const EdgeId> edges);

// w_j(S) = r * |{e in S : colour(e) = j}| - |S|.
std::int64_t weight(const Tree& t, const Colouring& c, std::span<const EdgeId> subtree, int colour);

ColourProfile profile(const Tree& t, const Colouring& c, Vertex v);

// Profile of v in the subforest of coloured edges; colours[e] == 0 marks an
// edge that is not coloured yet (and therefore not part of any subtree).
ColourProfile partial_profile(const Tree& t, int r, std::span<const int> colours, Vertex v);

// All n profiles in O(r m).
std::vector<ColourProfile> all_profiles(const Tree& t, const Colouring& c);

// max over colours j and subtrees S of w_j(S); ties go to the smallest anchor,
// then the smallest colour.
SubtreeWitness max_imbalance(const Tree& t, const Colouring& c);

// max over j, S of |w_j(S)|.
SubtreeWitness symmetric_max_imbalance(const Tree& t, const Colouring& c);

// Max total weight of a connected subtree (empty allowed, so value >= 0).
// Anchor is the smallest vertex of an optimal subtree; zero-gain branches are
// left out of the witness.
WeightedSubtree max_weight_subtree(const Tree& t, std::span<const double> weights);

// Colouring file: one colour (1..r) per line, in edge order.
Colouring parse_colouring(std::string_view text, int r);
std::string emit_colouring(const Colouring& c);

}  // namespace subdisc
