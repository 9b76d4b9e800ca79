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
#include <map>
#include <string>
#include <vector>

#include "subdisc/imbalance.hpp"
#include "subdisc/oriented.hpp"
#include "subdisc/tree.hpp"

namespace subdisc {

struct ExactOptions {
  bool prune = true;
  bool break_symmetry = true;  // colour j may first appear only after 1..j-1
  double budget_bits = 24.0;   // m * log2(r) must not exceed this
  int oriented_budget = 22;    // max edges for the oriented search
};

struct ExactResult {
  std::int64_t value = 0;
  Colouring optimal{2, {}};
  std::uint64_t search_size = 0;  // search nodes visited
};

struct ExactOrientedResult {
  std::int64_t value = 0;
  Orientation optimal;
  std::uint64_t search_size = 0;
};

// min over r-colourings of max_imbalance. Throws BudgetExceeded.
ExactResult exact_discrepancy(const Tree& t, int r, const ExactOptions& options = {});

// min over orientations of oriented_imbalance; edge 0 keeps bit 0 (global flip).
ExactOrientedResult exact_oriented_discrepancy(const Tree& t, const ExactOptions& options = {});

// AHU encoding rooted at the centroid; two centroids take the smaller string.
std::string canonical_form(const Tree& t);

// One tree per isomorphism class on exactly n vertices (2 <= n <= 12), grown by
// leaf augmentation from the n-1 classes and deduplicated by canonical_form.
// Output order is deterministic.
std::vector<Tree> enumerate_trees(int n);
// All classes for 2..n_max vertices, by increasing n.
std::vector<Tree> enumerate_trees_up_to(int n_max);
// Same classes via decoding every Prufer sequence; n <= 8.
std::vector<Tree> enumerate_trees_prufer(int n);

struct VerifyOptions {
  int n_max = 8;
  std::vector<int> r_set = {2};
  int oriented_n_max = 0;  // 0 disables the oriented sweep; trees with 3..n vertices
  int workers = 1;
  ExactOptions exact;
};

struct VerifyRow {
  int tree_id = 0;
  std::string mode;  // "colour" or "oriented"
  int r = 0;         // 0 for oriented rows
  int n = 0;
  int ell = 0;
  std::int64_t exact = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool ok = true;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  int violations = 0;
  // "colour r=3" / "oriented" -> (exact - lower) -> count
  std::map<std::string, std::map<std::int64_t, int>> lower_gaps;
  std::map<std::string, std::map<std::int64_t, int>> upper_gaps;  // upper - exact
};

// Colour rows for every tree on 2..n_max vertices and every r; r = 2 requires
// exact == ceil(l/2), otherwise lower <= exact <= upper. Oriented rows require
// ceil(l/2)+1 <= exact <= l. Rows are ordered by tree, then r, then oriented,
// independently of the worker count.
VerifyReport verify_theorems(const VerifyOptions& options);

std::string to_csv(const VerifyReport& report);

}  // namespace subdisc
