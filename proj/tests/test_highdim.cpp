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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "brute.hpp"
#include "subdisc/highdim.hpp"

using namespace subdisc;

namespace {

constexpr double kPi = std::numbers::pi;

double brute_max_norm(const Tree& t, const SphericalColouring& sc) {
  double best = 0.0;
  for (brute::Mask mask : brute::subtrees(t)) {
    const auto edges = brute::edges_of(mask);
    best = std::max(best, norm(vector_sum(sc, edges)));
  }
  return best;
}

SphericalColouring constant(int m, std::vector<double> u) {
  std::vector<double> flat;
  for (int e = 0; e < m; ++e) flat.insert(flat.end(), u.begin(), u.end());
  return SphericalColouring(static_cast<int>(u.size()) - 1, flat);
}

// Composite Simpson on [a, b] with an even number of panels.
template <typename F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST(SphericalColouring, Validation) {
  EXPECT_NO_THROW(SphericalColouring(1, {1.0, 0.0, 0.0, -1.0}));
  try {
    SphericalColouring(1, {1.0, 1e-3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnitDirection);
  }
  EXPECT_THROW(SphericalColouring(0, {1.0}), Error);
  EXPECT_THROW(SphericalColouring::from_rows(2, {{1.0, 0.0}}), Error);
}

TEST(ImbalanceInDirection, Examples) {
  const Tree p = family::path(7);
  const std::vector<double> u = {0.0, 1.0};
  const DirectionalWitness all = imbalance_in_direction(p, constant(6, u), u);
  EXPECT_DOUBLE_EQ(all.value, 6.0);
  EXPECT_EQ(all.edge_ids.size(), 6U);

  std::vector<std::vector<double>> rows;
  for (int e = 0; e < 6; ++e) rows.push_back({0.0, e % 2 ? -1.0 : 1.0});
  const DirectionalWitness alt = imbalance_in_direction(p, SphericalColouring::from_rows(1, rows), u);
  EXPECT_DOUBLE_EQ(alt.value, 1.0);
  EXPECT_EQ(alt.edge_ids.size(), 1U);

  const DirectionalWitness orth = imbalance_in_direction(p, constant(6, {1.0, 0.0}), u);
  EXPECT_DOUBLE_EQ(orth.value, 0.0);
  EXPECT_TRUE(orth.edge_ids.empty());

  try {
    imbalance_in_direction(p, constant(6, u), std::vector<double>{1.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnitDirection);
  }
}

TEST(Sweep, StarOfFourQuarterTurns) {
  const Tree s = family::star(4);
  const SphericalColouring sc = colouring_from_angles(std::vector<double>{0, kPi / 2, kPi, 3 * kPi / 2});
  const DirectionalWitness w = sweep_max_imbalance(s, sc);
  EXPECT_NEAR(w.value, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(w.edge_ids.size(), 2U);
  EXPECT_NEAR(brute_max_norm(s, sc), std::sqrt(2.0), 1e-12);
}

TEST(Sweep, MonochromaticAndErrors) {
  const Tree p = family::path(11);
  const SphericalColouring sc = constant(10, {std::cos(0.3), std::sin(0.3)});
  const double v = sweep_max_imbalance(p, sc).value;
  EXPECT_LE(v, 10.0 + 1e-12);
  EXPECT_GE(v, 10.0 * std::cos(kPi / 720));
  EXPECT_THROW(sweep_max_imbalance(p, sc, 0), Error);
}

TEST(Sweep, BoundsAgainstEnumeration) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const Tree t = family::random_tree(2 + trial % 10, rng());
    const int d = 1 + trial % 3;
    const SphericalColouring sc = random_spherical_colouring(t.edge_count(), d, rng());
    const double exact = brute_max_norm(t, sc);
    const DirectionalWitness w = sweep_max_imbalance(t, sc, 720, 5);
    EXPECT_LE(w.value, exact + kWitnessTolerance);
    EXPECT_LE(w.value, norm(vector_sum(sc, w.edge_ids)) + kWitnessTolerance);
    EXPECT_NEAR(w.value, dot(w.direction, vector_sum(sc, w.edge_ids)), 1e-12);
    if (d == 1) EXPECT_GE(w.value, std::cos(kPi / 720) * exact - 1e-12);
  }
}

TEST(SampleSphere, UnitNorm) {
  std::mt19937_64 rng(53);
  for (int d = 1; d <= 64; ++d) {
    for (int i = 0; i < 50; ++i) {
      const auto v = sample_sphere(d, rng);
      ASSERT_EQ(static_cast<int>(v.size()), d + 1);
      ASSERT_NEAR(norm(v), 1.0, kUnitTolerance);
    }
  }
  EXPECT_THROW(sample_sphere(0, rng), Error);
}

TEST(SampleSphere, FirstCoordinateUniformOnTwoSphere) {
  std::mt19937_64 rng(57);
  const int n = 100000;
  std::vector<double> xs(n);
  for (double& x : xs) x = sample_sphere(2, rng)[0];
  std::sort(xs.begin(), xs.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double cdf = (xs[i] + 1.0) / 2.0;
    ks = std::max({ks, std::abs(cdf - static_cast<double>(i) / n), std::abs(cdf - (i + 1.0) / n)});
  }
  EXPECT_LT(ks, 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST(SampleSphere, CircleAngleUniform) {
  std::mt19937_64 rng(59);
  const int n = 36000;
  std::vector<int> bins(36, 0);
  for (int i = 0; i < n; ++i) {
    const auto v = sample_sphere(1, rng);
    double a = std::atan2(v[1], v[0]);
    if (a < 0) a += 2 * kPi;
    ++bins[std::min(35, static_cast<int>(a / (2 * kPi) * 36))];
  }
  double chi2 = 0.0;
  for (int c : bins) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  EXPECT_LT(chi2, 57.34);  // 35 degrees of freedom, alpha = 0.01
}

TEST(MarginalDensity, Values) {
  for (double x : {-0.9, -0.2, 0.0, 0.5, 1.0}) EXPECT_NEAR(marginal_density(3, x), 0.5, 1e-14);
  EXPECT_NEAR(marginal_density(2, 0.0), 1.0 / kPi, 1e-14);
  try {
    marginal_density(3, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
  EXPECT_THROW(marginal_density(1, 0.0), Error);
}

TEST(MarginalDensity, IntegratesToOne) {
  for (int d : {2, 3, 4, 5, 7, 10, 20, 50}) {
    // x = sin(theta) removes the endpoint singularity at d = 2
    const auto f = [d](double theta) {
      const double c = std::cos(theta);
      if (c < 1e-12) return d == 2 ? 1.0 / beta(0.5, 0.5) : 0.0;
      return marginal_density(d, std::sin(theta)) * c;
    };
    const double integral = simpson(f, -kPi / 2, kPi / 2, 4000);
    EXPECT_NEAR(integral, 1.0, 1e-8) << "d=" << d;
  }
}

TEST(BetaBound, Values) {
  EXPECT_NEAR(beta_bound(1, 100), 100 / kPi, 1e-12);
  EXPECT_NEAR(beta_bound(2, 40), 10.0, 1e-12);
  const int d = 10000;
  EXPECT_NEAR(beta_bound(d, 50) / (50 / std::sqrt(2 * kPi * d)), 1.0, 0.01);
  EXPECT_THROW(beta_bound(0, 5), Error);
  EXPECT_THROW(beta_bound(2, 1), Error);
  EXPECT_NEAR(beta(0.5, 0.5), kPi, 1e-12);
  EXPECT_NEAR(mean_abs_projection(1), 2 / kPi, 1e-12);
}

TEST(MeanAbsProjection, MonteCarlo) {
  std::mt19937_64 rng(61);
  for (int d : {1, 2, 3, 5, 10}) {
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += std::abs(sample_sphere(d, rng)[0]);
    EXPECT_NEAR(sum / n / mean_abs_projection(d), 1.0, 0.01) << "d=" << d;
  }
}

TEST(ProjectionWitness, ConstantStar) {
  const Tree s = family::star(12);
  const SphericalColouring sc = constant(12, {0.0, 0.6, 0.8});
  const ProjectionReport rep = projection_witness(s, sc, 4000, 3);
  EXPECT_EQ(rep.witness.edge_ids.size(), 12U);
  EXPECT_GT(rep.witness.value, 0.98 * 12);
  EXPECT_THROW(projection_witness(s, sc, 0, 3), Error);
}

TEST(ProjectionWitness, HalfMassGuarantee) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const Tree t = family::random_tree(3 + trial * 5, rng());
    const int d = 1 + trial % 4;
    const SphericalColouring sc = random_spherical_colouring(t.edge_count(), d, rng());
    const ProjectionReport rep = projection_witness(t, sc, 2000, rng());
    EXPECT_GE(rep.witness.value, rep.best_mass / 2 - kWitnessTolerance);
    EXPECT_LE(rep.witness.value, norm(vector_sum(sc, rep.witness.edge_ids)) + kWitnessTolerance);
    EXPECT_NEAR(norm(rep.witness.direction), 1.0, 1e-12);
    EXPECT_GE(rep.best_mass, rep.mean_mass);
  }
}

TEST(RootsOfUnity, TwoColoursMatchSymmetricImbalance) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Tree t = family::random_tree(2 + trial, rng());
    const Colouring c(2, brute::random_colours(t.edge_count(), 2, rng));
    const SphericalColouring sc = roots_of_unity_embedding(c);
    for (EdgeId e = 0; e < sc.size(); ++e) {
      EXPECT_NEAR(std::abs(sc[e][0]), 1.0, 1e-15);
      EXPECT_NEAR(sc[e][1], 0.0, 1e-15);
    }
    EXPECT_NEAR(sweep_max_imbalance(t, sc).value,
                static_cast<double>(symmetric_max_imbalance(t, c).value), 1e-9);
  }
}

TEST(RootsOfUnity, EquipartitionedStarCancels) {
  const Tree s = family::star(6);
  const SphericalColouring sc = roots_of_unity_embedding(Colouring(3, {1, 2, 3, 1, 2, 3}));
  const std::vector<EdgeId> all = {0, 1, 2, 3, 4, 5};
  EXPECT_NEAR(norm(vector_sum(sc, all)), 0.0, 1e-12);
}

TEST(RootsOfUnity, SweepBelowSymmetricImbalance) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = family::random_tree(2 + trial % 60, rng());
    const int r = 2 + trial % 7;
    const Colouring c(r, brute::random_colours(t.edge_count(), r, rng));
    EXPECT_LE(sweep_max_imbalance(t, roots_of_unity_embedding(c)).value,
              symmetric_max_imbalance(t, c).value + 1e-9);
  }
}

TEST(SpreadAngles, OddStarGivesRootsOfUnity) {
  for (int l : {3, 5, 7}) {
    const Tree s = family::star(l);
    const SphericalColouring sc = colouring_from_angles(spread_angles(s));
    const double target = 1.0 / (2.0 * std::sin(kPi / (2.0 * l)));
    EXPECT_NEAR(brute_max_norm(s, sc), target, 1e-9);
    EXPECT_NEAR(sweep_max_imbalance(s, sc).value, target, target * (1 - std::cos(kPi / 720)) + 1e-9);
  }
}

TEST(LocalSearch, StarsPathsAndFloor) {
  for (int l = 2; l <= 8; ++l) {
    const Tree s = family::star(l);
    const double start = sweep_max_imbalance(s, colouring_from_angles(spread_angles(s))).value;
    const LocalSearchResult res = complex_local_search(s, 8, 2, 5);
    EXPECT_LE(res.value, start + 1e-12);
    EXPECT_GE(res.value, std::cos(kPi / 720) * l / kPi - 1e-9);
    EXPECT_NEAR(res.ell_over_pi, l / kPi, 1e-12);
    EXPECT_NEAR(res.conjectured, 1.0 / (2 * std::sin(kPi / (2 * l))), 1e-12);
  }
  const LocalSearchResult p = complex_local_search(family::path(8), 5, 2, 1);
  EXPECT_LE(p.value, 2.0);
}

TEST(LocalSearch, DeterministicUnderSeed) {
  const Tree t = family::random_tree(12, 4);
  const LocalSearchResult a = complex_local_search(t, 4, 3, 99);
  const LocalSearchResult b = complex_local_search(t, 4, 3, 99);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(std::vector<double>(a.colouring.flat().begin(), a.colouring.flat().end()),
            std::vector<double>(b.colouring.flat().begin(), b.colouring.flat().end()));
  EXPECT_THROW(complex_local_search(t, 1, 0, 1), Error);
}

TEST(SphericalIo, RoundTrip) {
  const SphericalColouring sc = random_spherical_colouring(5, 3, 8);
  const SphericalColouring back = parse_spherical_colouring(emit_spherical_colouring(sc));
  EXPECT_EQ(back.dimension(), 3);
  for (EdgeId e = 0; e < 5; ++e) {
    for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(back[e][i], sc[e][i]);
  }
  EXPECT_THROW(parse_spherical_colouring("1 0\n0 1 0\n"), Error);
  EXPECT_THROW(parse_spherical_colouring("1 1\n"), Error);
}
