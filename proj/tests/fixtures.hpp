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

#include <utility>
#include <vector>

#include "subdisc/tree.hpp"

namespace fixtures {

// The 17-vertex, 6-leaf worked example: a base path 0..6 with leaf paths
// attached at 1 (->8), 3 (->11), 5 (->14) and 10 (->16).
inline subdisc::Tree worked_tree() {
  const std::vector<std::pair<int, int>> pairs = {
      {0, 1}, {1, 2},  {2, 3},   {3, 4},   {4, 5},   {5, 6},   {1, 7},   {7, 8},
      {3, 9}, {9, 10}, {10, 11}, {5, 12}, {12, 13}, {13, 14}, {10, 15}, {15, 16}};
  return subdisc::Tree::from_edge_list(pairs);
}

}  // namespace fixtures
