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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "subdisc/highdim.hpp"
#include "subdisc/multicolour.hpp"
#include "subdisc/oracle.hpp"
#include "subdisc/oriented.hpp"

using namespace subdisc;

namespace {

constexpr double kMonteCarloRelTol = 0.01;
constexpr double kDensityTol = 1e-8;
constexpr double kWitnessFactor = 0.99;
constexpr double kChainTol = 1e-9;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok) fail(what());
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << " (" << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << first_;
    s << ")";
    return {failures_ == 0, s.str()};
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_;
};

Tree random_tree_in(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> size(lo, hi);
  return family::random_tree(size(rng), rng());
}

Colouring random_colouring(int m, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, r);
  std::vector<int> c(static_cast<std::size_t>(m));
  for (int& x : c) x = pick(rng);
  return Colouring(r, c);
}

Outcome criterion1() {
  Tally tally;
  int trees = 0;
  for (const Tree& t : enumerate_trees_up_to(10)) {
    ++trees;
    const std::int64_t exact = exact_discrepancy(t, 2).value;
    tally.check(exact == ceil_div(t.leaf_count(), 2), [&] {
      return "n=" + std::to_string(t.vertex_count()) + " exact=" + std::to_string(exact);
    });
  }
  return tally.outcome("r=2 exact == ceil(l/2) on all " + std::to_string(trees) + " trees with 2..10 vertices");
}

Outcome criterion2() {
  Tally tally;
  int trees = 0;
  for (const Tree& t : enumerate_trees_up_to(9)) {
    ++trees;
    const int l = t.leaf_count();
    const std::int64_t exact = exact_discrepancy(t, 3).value;
    tally.check(ceil_div(2 * l, 3) <= exact && exact <= l, [&] {
      return "l=" + std::to_string(l) + " exact=" + std::to_string(exact);
    });
  }
  return tally.outcome("r=3 ceil(2l/3) <= exact <= l on all " + std::to_string(trees) + " trees with 2..9 vertices");
}

Outcome criterion3() {
  Tally tally;
  std::mt19937_64 rng(3003);
  int over_bound = 0;
  int undominated = 0;
  for (int i = 0; i < 1000; ++i) {
    const Tree t = random_tree_in(rng, 2, 300);
    for (int r = 2; r <= 8; ++r) {
      const ColouringCertificate cert = certify_colouring(t, colour_tree(t, r));
      over_bound += cert.achieved > cert.upper;
      undominated += !cert.all_dominated;
      tally.check(cert.achieved <= cert.upper && cert.all_dominated, [&] {
        return "tree " + std::to_string(i) + " (n=" + std::to_string(t.vertex_count()) +
               " l=" + std::to_string(t.leaf_count()) + ") r=" + std::to_string(r) +
               (cert.achieved > cert.upper ? " over bound" : " not dominated");
      });
    }
  }
  return tally.outcome("colour_tree within ceil((r-1)l/2) with every profile dominated by d_l, 1000 trees x r=2..8; " +
                       std::to_string(over_bound) + " over bound, " + std::to_string(undominated) + " not dominated");
}

Outcome criterion4() {
  Tally tally;
  std::mt19937_64 rng(4004);
  for (int i = 0; i < 1000; ++i) {
    const Tree t = random_tree_in(rng, 2, 300);
    const int r = 2 + i % 7;
    const Colouring c = random_colouring(t.edge_count(), r, rng);
    const LowerBoundWitness lb = lower_bound_witness(t, c);
    std::int64_t sum = 0;
    for (auto w : lb.per_colour) sum += w;
    const int l = t.leaf_count();
    // a single edge is one leaf edge, not two
    const std::int64_t expected_sum = static_cast<std::int64_t>(r - 1) * (t.vertex_count() == 2 ? 1 : l);
    tally.check(lb.witness.value >= lower_bound(l, r) && sum == expected_sum &&
                    weight(t, c, lb.witness.edge_ids, lb.witness.colour) == lb.witness.value,
                [&] { return "pair " + std::to_string(i); });
  }
  return tally.outcome("lower_bound_witness >= ceil((r-1)l/r) and sum_j w_j(T_j) = (r-1)l, 1000 pairs");
}

Outcome criterion5() {
  Tally tally;
  for (int l = 2; l <= 8; ++l) {
    for (int r = 2; r <= 4; ++r) {
      const std::int64_t exact = exact_discrepancy(family::star(l), r).value;
      tally.check(exact == (r - 1) * ceil_div(l, r), [&] {
        return "star l=" + std::to_string(l) + " r=" + std::to_string(r) + " exact=" + std::to_string(exact);
      });
    }
  }
  const std::int64_t spider = exact_discrepancy(family::spider(3, 3), 3).value;
  tally.check(spider == 3 && spider == upper_bound(3, 3), [&] { return "spider exact=" + std::to_string(spider); });
  return tally.outcome("star(l) exact = (r-1)ceil(l/r) for l<=8, r<=4; spider(3,3) r=3 exact = 3");
}

Outcome criterion6() {
  Tally tally;
  int trees = 0;
  for (const Tree& t : enumerate_trees_up_to(10)) {
    if (t.vertex_count() < 3) continue;
    ++trees;
    const int l = t.leaf_count();
    const std::int64_t exact = exact_oriented_discrepancy(t).value;
    tally.check(ceil_div(l, 2) + 1 <= exact && exact <= l, [&] {
      return "l=" + std::to_string(l) + " exact=" + std::to_string(exact);
    });
  }
  for (int l = 2; l <= 10; ++l) {
    const std::int64_t exact = exact_oriented_discrepancy(family::star(l)).value;
    tally.check(exact == ceil_div(l, 2) + 1, [&] { return "star l=" + std::to_string(l); });
  }
  std::mt19937_64 rng(6006);
  for (int i = 0; i < 1000; ++i) {
    const Tree t = random_tree_in(rng, 2, 300);
    const OrientedProfiles p = oriented_profiles(t, orient_tree(t));
    std::int64_t worst = 0;
    for (std::size_t v = 0; v < p.away.size(); ++v) worst = std::max(worst, p.away[v] + p.toward[v]);
    tally.check(worst <= t.leaf_count(), [&] { return "orient_tree tree " + std::to_string(i); });
  }
  return tally.outcome("oriented exact in [ceil(l/2)+1, l] on all " + std::to_string(trees) +
                       " trees with <= 9 edges; stars exact; A(v)+B(v) <= l on 1000 trees");
}

Outcome criterion7() {
  Tally tally;
  std::mt19937_64 rng(7007);
  std::ostringstream summary;
  for (int d : {1, 2, 3, 5, 10}) {
    const Tree t = random_tree_in(rng, 40, 80);
    const SphericalColouring sc = random_spherical_colouring(t.edge_count(), d, rng());
    const ProjectionReport rep = projection_witness(t, sc, 1000000, rng());
    const double expected = t.leaf_count() * mean_abs_projection(d);
    const double rel = std::abs(rep.mean_mass / expected - 1.0);
    summary << " d=" << d << ":" << rel;
    tally.check(rel <= kMonteCarloRelTol, [&] { return "d=" + std::to_string(d); });
  }
  for (int d : {2, 3, 4, 5, 10, 20}) {
    // Simpson in theta with x = sin(theta)
    const int panels = 4000;
    const double a = -std::numbers::pi / 2;
    const double h = std::numbers::pi / panels;
    auto f = [d](double theta) {
      const double c = std::cos(theta);
      if (c < 1e-12) return d == 2 ? 1.0 / std::numbers::pi : 0.0;
      return marginal_density(d, std::sin(theta)) * c;
    };
    double s = f(a) + f(-a);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    const double integral = s * h / 3.0;
    tally.check(std::abs(integral - 1.0) <= kDensityTol, [&] { return "density d=" + std::to_string(d); });
  }
  return tally.outcome("mean D_v over 1e6 samples within 1% (relative errors" + summary.str() +
                       "); density integrals within 1e-8");
}

Outcome criterion8() {
  Tally tally;
  std::mt19937_64 rng(8008);
  const std::vector<int> dims = {1, 2, 3, 5, 10};
  double worst = 1e300;
  for (int i = 0; i < 100; ++i) {
    Tree t = random_tree_in(rng, 60, 200);
    while (t.leaf_count() < 20) t = random_tree_in(rng, 60, 200);
    const int d = dims[static_cast<std::size_t>(i) % dims.size()];
    const SphericalColouring sc = random_spherical_colouring(t.edge_count(), d, rng());
    const ProjectionReport rep = projection_witness(t, sc, 10000, rng());
    const double bound = beta_bound(d, t.leaf_count());
    const double certified = std::min(rep.witness.value, norm(vector_sum(sc, rep.witness.edge_ids)));
    worst = std::min(worst, certified / bound);
    tally.check(certified >= kWitnessFactor * bound, [&] { return "colouring " + std::to_string(i); });
  }
  return tally.outcome("projection witness >= 0.99 l/(d B(d/2,1/2)) on 100 colourings, worst ratio " +
                       std::to_string(worst));
}

Outcome criterion9() {
  Tally tally;
  std::mt19937_64 rng(9009);
  for (int i = 0; i < 1000; ++i) {
    const Tree t = random_tree_in(rng, 2, 120);
    const int r = 2 + i % 7;
    const Colouring c = random_colouring(t.edge_count(), r, rng);
    const std::int64_t upper = max_imbalance(t, c).value;
    const std::int64_t symmetric = symmetric_max_imbalance(t, c).value;
    const double sweep = sweep_max_imbalance(t, roots_of_unity_embedding(c), 720).value;
    tally.check(sweep <= symmetric + kChainTol && upper <= symmetric && symmetric <= (r - 1) * upper,
                [&] { return "pair " + std::to_string(i); });
  }
  return tally.outcome("sweep(roots of unity, 720) <= symmetric + 1e-9 and upper <= symmetric <= (r-1) upper, 1000 pairs");
}

Outcome criterion10() {
  Tally tally;
  std::ostringstream summary;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 4}, {5, 8}, {10, 10}, {13, 17}}) {
    const Graph g = grid_plus(m, n);
    const Tree t = leafy_spanning_tree(g);
    const int l = t.leaf_count();
    summary << " " << m << "x" << n << ":" << l;
    tally.check(4 * l >= m * n + 8, [&] { return std::to_string(m) + "x" + std::to_string(n) + " leaves"; });
    for (int r : {2, 3}) {
      const std::int64_t certified = lower_bound(l, r) - 2 * r;
      const double target = (r - 1) * m * n / (4.0 * r) + 1 - 2 * r;
      tally.check(certified >= target, [&] {
        return std::to_string(m) + "x" + std::to_string(n) + " r=" + std::to_string(r);
      });
    }
  }
  return tally.outcome("leafy spanning trees of grids with matching reach mn/4+2 leaves (" + summary.str().substr(1) +
                       ") and certify the grid bound for r=2,3");
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8,
                                                          criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2zu: %s  %s [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
