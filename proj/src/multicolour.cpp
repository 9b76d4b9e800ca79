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

#include "subdisc/multicolour.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace subdisc {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void check_lengths(std::span<const std::int64_t> m, std::span<const std::int64_t> n) {
  if (m.size() != n.size()) {
    fail(ErrorKind::LengthMismatch,
         "vectors of length " + std::to_string(m.size()) + " and " + std::to_string(n.size()));
  }
}

}  // namespace

MonotoneForm monotone(std::span<const std::int64_t> m) {
  std::vector<int> idx(m.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return m[a] < m[b]; });
  MonotoneForm out;
  out.sorted.reserve(m.size());
  out.permutation.reserve(m.size());
  for (int i : idx) {
    out.sorted.push_back(m[i]);
    out.permutation.push_back(i + 1);
  }
  return out;
}

IntVector alpha(std::span<const std::int64_t> m) {
  const auto r = static_cast<std::int64_t>(m.size());
  const MonotoneForm form = monotone(m);
  IntVector out(m.size());
  for (std::size_t pos = 0; pos < form.permutation.size(); ++pos) {
    const auto j = static_cast<std::size_t>(form.permutation[pos] - 1);
    out[j] = m[j] + r - static_cast<std::int64_t>(pos + 1);
  }
  return out;
}

bool dominated(std::span<const std::int64_t> m, std::span<const std::int64_t> n) {
  check_lengths(m, n);
  IntVector a(m.begin(), m.end());
  IntVector b(n.begin(), n.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

IntVector join(std::span<const std::int64_t> m, std::span<const std::int64_t> n) {
  check_lengths(m, n);
  IntVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = std::max(m[i], n[i]);
  return out;
}

bool is_increasing_lipschitz(std::span<const std::int64_t> m) {
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] < m[i - 1] || m[i] - m[i - 1] > 1) return false;
  }
  return true;
}

DominationVector d_vector(int r, int leaves) {
  if (r < 2 || leaves < 2) fail(ErrorKind::ParamOutOfRange, "d_vector needs r >= 2 and l >= 2");
  DominationVector d;
  d.entries.resize(static_cast<std::size_t>(r));
  for (int j = 1; j <= r; ++j) d.entries[j - 1] = r - ceil_div(r + 1 - j, 2);
  for (int l = 3; l <= leaves; ++l) {
    const std::int64_t previous_max = d.max();
    d.entries = monotone(alpha(d.entries)).sorted;
    if (d.min() != previous_max) throw std::logic_error("d_vector: min d_l != max d_(l-1)");
  }
  if (d.max() != ceil_div(static_cast<std::int64_t>(leaves) * (r - 1), 2)) {
    throw std::logic_error("d_vector: max differs from ceil(l (r-1) / 2)");
  }
  return d;
}

std::int64_t lower_bound(int leaves, int r) {
  return ceil_div(static_cast<std::int64_t>(r - 1) * leaves, r);
}

std::int64_t upper_bound(int leaves, int r) {
  return ceil_div(static_cast<std::int64_t>(r - 1) * leaves, 2);
}

ColouringTrace colour_tree_traced(const Tree& t, int r, const ColouringVariant& variant) {
  if (r < 2) fail(ErrorKind::ParamOutOfRange, "need at least 2 colours");
  const int n = t.vertex_count();
  std::vector<int> colours(static_cast<std::size_t>(t.edge_count()), 0);
  std::vector<Vertex> leaves = t.leaves();
  const int count = static_cast<int>(leaves.size());
  if (variant.first < 0 || variant.first >= variant.second || variant.second >= count || variant.phase < 0 ||
      variant.phase >= r) {
    fail(ErrorKind::ParamOutOfRange, "colouring variant out of range");
  }
  // base pair first, the rest in ascending order
  std::rotate(leaves.begin() + variant.second, leaves.begin() + variant.second + 1, leaves.end());
  std::rotate(leaves.begin() + variant.first, leaves.begin() + variant.first + 1, leaves.end() - 1);
  std::rotate(leaves.begin(), leaves.end() - 2, leaves.end());
  ColouringTrace trace{Colouring(r, std::vector<int>(colours.size(), 1)), {leaves[0], leaves[1]}, {}};

  std::vector<char> grown(static_cast<std::size_t>(n), 0);
  const std::vector<EdgeId> base = path_between(t, leaves[0], leaves[1]);
  Vertex x = leaves[0];
  grown[x] = 1;
  for (std::size_t i = 0; i < base.size(); ++i) {
    colours[base[i]] = static_cast<int>((i + static_cast<std::size_t>(variant.phase)) % static_cast<std::size_t>(r)) + 1;
    x = t.edge(base[i]).other(x);
    grown[x] = 1;
  }

  // Rooted at a grown vertex, the first grown vertex on the way up from a leaf
  // is where that leaf's path attaches.
  const Rooting rooting = root_at(t, leaves[0]);
  for (std::size_t li = 2; li < leaves.size(); ++li) {
    const Vertex leaf = leaves[li];
    std::vector<EdgeId> path;
    Vertex anchor = leaf;
    while (!grown[anchor]) {
      path.push_back(rooting.parent_edge[anchor]);
      anchor = rooting.parent[anchor];
    }
    std::reverse(path.begin(), path.end());

    ExtensionStep step{leaf, anchor, partial_profile(t, r, colours, anchor), {}, path};
    step.order = monotone(step.anchor_profile.values).permutation;
    Vertex y = anchor;
    for (std::size_t i = 0; i < path.size(); ++i) {
      colours[path[i]] = step.order[i % static_cast<std::size_t>(r)];
      y = t.edge(path[i]).other(y);
      grown[y] = 1;
    }
    trace.steps.push_back(std::move(step));
  }
  trace.colouring = Colouring(r, std::move(colours));
  return trace;
}

ColouringTrace colour_tree_traced(const Tree& t, int r) { return colour_tree_traced(t, r, {}); }

namespace {

// (largest profile entry, how many entries attain it)
std::pair<std::int64_t, std::int64_t> profile_score(const Tree& t, int r, const std::vector<int>& colours) {
  std::int64_t top = 0;
  std::int64_t count = 0;
  for (const ColourProfile& p : all_profiles(t, Colouring(r, colours))) {
    for (std::int64_t v : p.values) {
      if (v > top) {
        top = v;
        count = 0;
      }
      count += v == top;
    }
  }
  return {top, count};
}

// First-improvement descent over single-edge recolourings.
void repair(const Tree& t, int r, std::vector<int>& colours, std::int64_t target) {
  auto score = profile_score(t, r, colours);
  for (int moves = 0; score.first > target && moves < kMaxRepairMoves; ++moves) {
    bool improved = false;
    for (EdgeId e = 0; e < t.edge_count() && !improved; ++e) {
      const int old = colours[e];
      for (int k = 1; k <= r && !improved; ++k) {
        if (k == old) continue;
        colours[e] = k;
        const auto next = profile_score(t, r, colours);
        if (next < score) {
          score = next;
          improved = true;
        } else {
          colours[e] = old;
        }
      }
    }
    if (!improved) break;
  }
}

}  // namespace

Colouring colour_tree(const Tree& t, int r) {
  const int count = t.leaf_count();
  std::vector<Colouring> starts;
  std::optional<Colouring> within;
  std::int64_t upper = 0;
  for (int first = 0; first < count && starts.size() < kMaxColouringAttempts; ++first) {
    for (int second = first + 1; second < count && starts.size() < kMaxColouringAttempts; ++second) {
      for (int phase = 0; phase < r && starts.size() < kMaxColouringAttempts; ++phase) {
        Colouring c = colour_tree_traced(t, r, {first, second, phase}).colouring;
        const ColouringCertificate cert = certify_colouring(t, c);
        if (cert.achieved <= cert.upper) {
          if (cert.all_dominated) return c;
          if (!within) within = c;
        }
        upper = cert.upper;
        starts.push_back(std::move(c));
      }
    }
  }
  if (within) return *within;

  std::optional<Colouring> best;
  std::int64_t best_value = 0;
  for (std::size_t i = 0; i < starts.size() && i < kMaxRepairStarts; ++i) {
    std::vector<int> colours(starts[i].assignment().begin(), starts[i].assignment().end());
    repair(t, r, colours, upper);
    Colouring c(r, std::move(colours));
    const std::int64_t value = max_imbalance(t, c).value;
    if (value <= upper) return c;
    if (!best || value < best_value) {
      best_value = value;
      best = std::move(c);
    }
  }
  return *best;
}

LowerBoundWitness lower_bound_witness(const Tree& t, const Colouring& c) {
  if (c.size() != t.edge_count()) fail(ErrorKind::LengthMismatch, "colouring length");
  const int r = c.colours();
  std::vector<EdgeId> core;
  std::vector<std::vector<EdgeId>> leaf_edges(static_cast<std::size_t>(r));
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edge(e);
    if (t.degree(ed.u) == 1 || t.degree(ed.v) == 1) {
      leaf_edges[c[e] - 1].push_back(e);
    } else {
      core.push_back(e);
    }
  }
  Vertex anchor = 0;
  while (anchor < t.vertex_count() - 1 && t.degree(anchor) == 1) ++anchor;

  LowerBoundWitness out;
  std::vector<EdgeId> best_edges;
  for (int j = 1; j <= r; ++j) {
    std::vector<EdgeId> edges = core;
    edges.insert(edges.end(), leaf_edges[j - 1].begin(), leaf_edges[j - 1].end());
    std::sort(edges.begin(), edges.end());
    const std::int64_t value = weight(t, c, edges, j);
    out.per_colour.push_back(value);
    if (j == 1 || value > out.witness.value) {
      out.witness.value = value;
      out.witness.colour = j;
      best_edges = std::move(edges);
    }
  }
  out.witness.edge_ids = std::move(best_edges);
  out.witness.anchor = anchor;
  return out;
}

ColouringCertificate certify_colouring(const Tree& t, const Colouring& c) {
  const int leaves = t.leaf_count();
  const int r = c.colours();
  ColouringCertificate cert{leaves, r, 0, lower_bound(leaves, r), upper_bound(leaves, r), true, {}};
  cert.witness = max_imbalance(t, c);
  cert.achieved = cert.witness.value;
  const DominationVector d = d_vector(r, leaves);
  for (const ColourProfile& p : all_profiles(t, c)) {
    if (!dominated(p.values, d.entries)) {
      cert.all_dominated = false;
      break;
    }
  }
  return cert;
}

}  // namespace subdisc
