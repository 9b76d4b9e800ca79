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
#include <vector>

#include "subdisc/imbalance.hpp"
#include "subdisc/tree.hpp"

namespace subdisc {

using IntVector = std::vector<std::int64_t>;

// Sorting permutation of a vector. permutation[i] is the 1-based index of the
// entry placed at sorted position i, so sorted[i] == m[permutation[i] - 1].
// The sort is stable: equal entries keep their original order.
struct MonotoneForm {
  IntVector sorted;
  std::vector<int> permutation;
};

MonotoneForm monotone(std::span<const std::int64_t> m);

// a_j = m_j + r - (sorted position of j), positions counted from 1.
IntVector alpha(std::span<const std::int64_t> m);

// True iff some coordinate permutation of m is pointwise <= n, which holds
// exactly when sort(m) <= sort(n) pointwise.
bool dominated(std::span<const std::int64_t> m, std::span<const std::int64_t> n);

IntVector join(std::span<const std::int64_t> m, std::span<const std::int64_t> n);

bool is_increasing_lipschitz(std::span<const std::int64_t> m);

// The bounding vector for trees with `leaves` leaves: increasing, 1-Lipschitz,
// with maximum ceil(leaves * (r-1) / 2).
struct DominationVector {
  IntVector entries;

  std::int64_t max() const { return entries.back(); }
  std::int64_t min() const { return entries.front(); }
};

DominationVector d_vector(int r, int leaves);

std::int64_t lower_bound(int leaves, int r);  // ceil((r-1) l / r)
std::int64_t upper_bound(int leaves, int r);  // ceil((r-1) l / 2)

// One leaf-path extension performed by colour_tree.
struct ExtensionStep {
  Vertex leaf;
  Vertex anchor;
  ColourProfile anchor_profile;  // profile of the anchor in the tree grown so far
  std::vector<int> order;        // colour cycle used along the new path, from the anchor
  std::vector<EdgeId> path;      // edge ids from the anchor to the leaf
};

struct ColouringTrace {
  Colouring colouring;
  std::vector<Vertex> base_leaves;  // endpoints of the initial path
  std::vector<ExtensionStep> steps;
};

// Periodic colouring of the path between the two smallest leaves, then, for the
// remaining leaves in ascending order, a periodic colouring of the path joining
// the leaf to the grown tree, cycling colours from the least to the most
// popular at the attachment vertex. O(r m l) per attempt.
Colouring colour_tree(const Tree& t, int r);
ColouringTrace colour_tree_traced(const Tree& t, int r);

// Leaf indices (into t.leaves()) of the base path and the colour it starts
// with, minus one. The default is the construction described above.
struct ColouringVariant {
  int first = 0;
  int second = 1;
  int phase = 0;
};
ColouringTrace colour_tree_traced(const Tree& t, int r, const ColouringVariant& variant);

// colour_tree runs the default variant first and returns it when its
// certificate passes. Periodic base paths are not always dominated by d_2 once
// r >= 3, so failing that it tries other base pairs and phases, preferring a
// certified colouring, then any within ceil((r-1)l/2). If none is, it runs a
// single-edge recolouring descent from the first kMaxRepairStarts attempts and
// returns the first result within the bound, else the smallest seen.
inline constexpr std::size_t kMaxColouringAttempts = 64;
inline constexpr std::size_t kMaxRepairStarts = 16;
inline constexpr int kMaxRepairMoves = 256;

struct LowerBoundWitness {
  SubtreeWitness witness;
  // per_colour[j-1] = w_j(T_j); these sum to (r-1) * leaf edges.
  std::vector<std::int64_t> per_colour;
};

// T' = the tree without its leaf edges; T_j = T' plus the colour-j leaf edges.
// Returns the best T_j (smallest colour on ties).
LowerBoundWitness lower_bound_witness(const Tree& t, const Colouring& c);

struct ColouringCertificate {
  int leaves;
  int r;
  std::int64_t achieved;
  std::int64_t lower;
  std::int64_t upper;
  bool all_dominated;  // every vertex profile dominated by d_vector(r, leaves)
  SubtreeWitness witness;
};

ColouringCertificate certify_colouring(const Tree& t, const Colouring& c);

}  // namespace subdisc
