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

#include "subdisc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "subdisc/multicolour.hpp"

namespace subdisc {

namespace {

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Edges in BFS order from vertex 0 with the endpoint reached first; every
// prefix is connected and each new edge adds one new vertex.
struct GrowthOrder {
  std::vector<EdgeId> edges;
  std::vector<Vertex> anchors;
};

GrowthOrder growth_order(const Tree& t) {
  const Rooting rooting = root_at(t, 0);
  GrowthOrder g;
  for (std::size_t i = 1; i < rooting.order.size(); ++i) {
    const Vertex v = rooting.order[i];
    g.edges.push_back(rooting.parent_edge[v]);
    g.anchors.push_back(rooting.parent[v]);
  }
  return g;
}

class ColourSearch {
 public:
  ColourSearch(const Tree& t, int r, const ExactOptions& options)
      : t_(t), r_(r), options_(options), order_(growth_order(t)),
        colours_(static_cast<std::size_t>(t.edge_count()), 0) {}

  ExactResult run() {
    dfs(0, 0, std::numeric_limits<std::int64_t>::min());
    return {best_, Colouring(r_, best_colours_), nodes_};
  }

 private:
  void dfs(std::size_t k, int used, std::int64_t bound) {
    ++nodes_;
    if (options_.prune && bound >= best_) return;
    if (k == order_.edges.size()) {
      const std::int64_t value =
          options_.prune ? bound : max_imbalance(t_, Colouring(r_, colours_)).value;
      if (value < best_) {
        best_ = value;
        best_colours_ = colours_;
      }
      return;
    }
    const EdgeId e = order_.edges[k];
    ColourProfile at_anchor;
    if (options_.prune) at_anchor = partial_profile(t_, r_, colours_, order_.anchors[k]);
    const int limit = options_.break_symmetry ? std::min(r_, used + 1) : r_;
    for (int c = 1; c <= limit; ++c) {
      colours_[e] = c;
      std::int64_t next = bound;
      if (options_.prune) {
        for (int j = 1; j <= r_; ++j) {
          next = std::max(next, (j == c ? r_ - 1 : -1) + at_anchor.values[j - 1]);
        }
      }
      dfs(k + 1, std::max(used, c), next);
      colours_[e] = 0;
      // a single edge already has imbalance r-1
      if (options_.prune && best_ == r_ - 1) return;
    }
  }

  const Tree& t_;
  int r_;
  ExactOptions options_;
  GrowthOrder order_;
  std::vector<int> colours_;
  std::vector<int> best_colours_;
  std::int64_t best_ = kUnset;
  std::uint64_t nodes_ = 0;
};

class OrientedSearch {
 public:
  OrientedSearch(const Tree& t, const ExactOptions& options)
      : t_(t), options_(options), order_(growth_order(t)),
        bits_(static_cast<std::size_t>(t.edge_count()), 0),
        assigned_(static_cast<std::size_t>(t.edge_count()), 0),
        floor_(t.vertex_count() >= 3 ? 2 : 1) {}

  ExactOrientedResult run() {
    dfs(0, 0);
    return {best_, Orientation(best_bits_), nodes_};
  }

 private:
  std::int64_t partial_max() const {
    const OrientedProfiles p = partial_oriented_profiles(t_, Orientation(bits_), assigned_);
    std::int64_t out = 0;
    for (std::size_t v = 0; v < p.away.size(); ++v) out = std::max({out, p.away[v], p.toward[v]});
    return out;
  }

  void dfs(std::size_t k, std::int64_t bound) {
    ++nodes_;
    if (options_.prune && bound >= best_) return;
    if (k == order_.edges.size()) {
      const std::int64_t value =
          options_.prune ? bound : oriented_imbalance(t_, Orientation(bits_)).value;
      if (value < best_) {
        best_ = value;
        best_bits_ = bits_;
      }
      return;
    }
    const EdgeId e = order_.edges[k];
    const int choices = (k == 0 && options_.break_symmetry) ? 1 : 2;
    assigned_[e] = 1;
    for (int b = 0; b < choices; ++b) {
      bits_[e] = static_cast<std::uint8_t>(b);
      dfs(k + 1, options_.prune ? partial_max() : bound);
      // any two adjacent edges already reach 2
      if (options_.prune && best_ == floor_) break;
    }
    bits_[e] = 0;
    assigned_[e] = 0;
  }

  const Tree& t_;
  ExactOptions options_;
  GrowthOrder order_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint8_t> assigned_;
  std::vector<std::uint8_t> best_bits_;
  std::int64_t floor_;
  std::int64_t best_ = kUnset;
  std::uint64_t nodes_ = 0;
};

std::string rooted_encoding(const Tree& t, Vertex root) {
  const Rooting rooting = root_at(t, root);
  std::vector<std::vector<std::string>> parts(static_cast<std::size_t>(t.vertex_count()));
  std::vector<std::string> enc(static_cast<std::size_t>(t.vertex_count()));
  for (auto it = rooting.order.rbegin(); it != rooting.order.rend(); ++it) {
    const Vertex v = *it;
    auto& children = parts[v];
    std::sort(children.begin(), children.end());
    enc[v] = "(";
    for (const auto& c : children) enc[v] += c;
    enc[v] += ")";
    if (rooting.parent[v] >= 0) parts[rooting.parent[v]].push_back(std::move(enc[v]));
  }
  return enc[root];
}

std::vector<Vertex> centroids(const Tree& t) {
  const int n = t.vertex_count();
  const Rooting rooting = root_at(t, 0);
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  for (auto it = rooting.order.rbegin(); it != rooting.order.rend(); ++it) {
    if (rooting.parent[*it] >= 0) size[rooting.parent[*it]] += size[*it];
  }
  std::vector<int> heaviest(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    heaviest[v] = n - size[v];
    for (const Incidence& inc : t.neighbours(v)) {
      if (inc.neighbour != rooting.parent[v]) heaviest[v] = std::max(heaviest[v], size[inc.neighbour]);
    }
  }
  const int best = *std::min_element(heaviest.begin(), heaviest.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (heaviest[v] == best) out.push_back(v);
  }
  return out;
}

void check_enumeration_size(int n, int limit) {
  if (n < 2 || n > limit) {
    fail(ErrorKind::ParamOutOfRange,
         "tree enumeration needs 2 <= n <= " + std::to_string(limit) + ", got " + std::to_string(n));
  }
}

}  // namespace

ExactResult exact_discrepancy(const Tree& t, int r, const ExactOptions& options) {
  if (r < 2) fail(ErrorKind::ParamOutOfRange, "need at least 2 colours");
  const double bits = t.edge_count() * std::log2(static_cast<double>(r));
  if (bits > options.budget_bits + 1e-9) {
    std::ostringstream msg;
    msg << "search space of " << bits << " bits exceeds the budget of " << options.budget_bits;
    fail(ErrorKind::BudgetExceeded, msg.str());
  }
  return ColourSearch(t, r, options).run();
}

ExactOrientedResult exact_oriented_discrepancy(const Tree& t, const ExactOptions& options) {
  if (t.edge_count() > options.oriented_budget) {
    fail(ErrorKind::BudgetExceeded, std::to_string(t.edge_count()) + " edges exceed the budget of " +
                                        std::to_string(options.oriented_budget));
  }
  return OrientedSearch(t, options).run();
}

std::string canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : centroids(t)) {
    std::string enc = rooted_encoding(t, c);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

std::vector<Tree> enumerate_trees(int n) {
  check_enumeration_size(n, 12);
  std::vector<Tree> level = {family::path(2)};
  for (int size = 3; size <= n; ++size) {
    std::vector<Tree> next;
    std::unordered_set<std::string> seen;
    for (const Tree& t : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.push_back({v, size - 1});
        Tree grown = Tree::from_edges(size, std::move(edges));
        if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Tree> enumerate_trees_up_to(int n_max) {
  check_enumeration_size(n_max, 12);
  std::vector<Tree> out;
  for (int n = 2; n <= n_max; ++n) {
    auto level = enumerate_trees(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

std::vector<Tree> enumerate_trees_prufer(int n) {
  check_enumeration_size(n, 8);
  if (n == 2) return {family::path(2)};
  std::vector<Tree> out;
  std::unordered_set<std::string> seen;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    Tree t = prufer_decode(seq, n);
    if (seen.insert(canonical_form(t)).second) out.push_back(std::move(t));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

VerifyReport verify_theorems(const VerifyOptions& options) {
  for (int r : options.r_set) {
    if (r < 2) fail(ErrorKind::ParamOutOfRange, "r-set entries must be >= 2");
  }
  if (options.n_max < 2 && options.oriented_n_max < 3) {
    fail(ErrorKind::ParamOutOfRange, "nothing to verify");
  }
  const int top = std::max(options.n_max, options.oriented_n_max);
  const std::vector<Tree> trees = enumerate_trees_up_to(std::max(top, 2));
  std::vector<std::vector<VerifyRow>> per_tree(trees.size());

  auto check_tree = [&](std::size_t id) {
    const Tree& t = trees[id];
    const int n = t.vertex_count();
    const int ell = t.leaf_count();
    auto& rows = per_tree[id];
    if (n <= options.n_max) {
      for (int r : options.r_set) {
        VerifyRow row{static_cast<int>(id), "colour", r, n, ell, 0, lower_bound(ell, r),
                      upper_bound(ell, r), true};
        row.exact = exact_discrepancy(t, r, options.exact).value;
        row.ok = r == 2 ? row.exact == ceil_div(ell, 2)
                        : row.lower <= row.exact && row.exact <= row.upper;
        rows.push_back(row);
      }
    }
    if (n >= 3 && n <= options.oriented_n_max) {
      VerifyRow row{static_cast<int>(id), "oriented", 0, n, ell, 0, ceil_div(ell, 2) + 1, ell, true};
      row.exact = exact_oriented_discrepancy(t, options.exact).value;
      row.ok = row.lower <= row.exact && row.exact <= row.upper;
      rows.push_back(row);
    }
  };

  const int workers = std::max(1, options.workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t id; (id = next.fetch_add(1)) < trees.size();) {
      try {
        check_tree(id);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = trees.size();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  VerifyReport report;
  for (auto& rows : per_tree) {
    for (auto& row : rows) {
      const std::string key = row.mode == "colour" ? "colour r=" + std::to_string(row.r) : "oriented";
      ++report.lower_gaps[key][row.exact - row.lower];
      ++report.upper_gaps[key][row.upper - row.exact];
      if (!row.ok) ++report.violations;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string to_csv(const VerifyReport& report) {
  std::ostringstream out;
  out << "tree_id,mode,r,n,ell,exact,lower,upper,ok\n";
  for (const VerifyRow& row : report.rows) {
    out << row.tree_id << ',' << row.mode << ',' << row.r << ',' << row.n << ',' << row.ell << ','
        << row.exact << ',' << row.lower << ',' << row.upper << ',' << (row.ok ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace subdisc
