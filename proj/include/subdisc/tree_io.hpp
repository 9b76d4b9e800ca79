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

#include "subdisc/tree.hpp"

namespace subdisc {

// Edge-list text: a header line "n m" followed by m lines "u v" (0-indexed).
// Blank lines and lines starting with '#' are skipped. Errors carry the line.
Tree parse_edge_list(std::string_view text);
std::string emit_edge_list(const Tree& t);

// Graphviz export. A non-empty `colours` (1..r per edge) labels and colours the
// edges; a non-empty `orientation` (0: u->v, 1: v->u) makes it a digraph.
std::string emit_dot(const Tree& t, std::span<const int> colours = {},
                     std::span<const std::uint8_t> orientation = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace subdisc
