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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subdisc/imbalance.hpp"
#include "subdisc/tree.hpp"

namespace subdisc {

inline constexpr double kUnitTolerance = 1e-12;
inline constexpr double kWitnessTolerance = 1e-9;
inline constexpr int kDefaultDirections = 720;

// One unit vector in R^(d+1) per edge, stored row-major.
class SphericalColouring {
 public:
  SphericalColouring(int d, std::vector<double> flat);
  static SphericalColouring from_rows(int d, const std::vector<std::vector<double>>& rows);

  int dimension() const { return d_; }
  int width() const { return d_ + 1; }
  int size() const { return static_cast<int>(data_.size()) / width(); }
  std::span<const double> operator[](EdgeId e) const {
    return {data_.data() + static_cast<std::size_t>(e) * width(), static_cast<std::size_t>(width())};
  }
  std::span<const double> flat() const { return data_; }

 private:
  int d_;
  std::vector<double> data_;
};

struct DirectionalWitness {
  std::vector<double> direction;
  std::vector<EdgeId> edge_ids;
  double value = 0.0;  // direction . D(S), a lower bound on |D(S)|
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
// D(S) = sum of f(e) over e in S.
std::vector<double> vector_sum(const SphericalColouring& sc, std::span<const EdgeId> edges);

// Max-weight subtree for weights u.f(e), tried for u and -u.
DirectionalWitness imbalance_in_direction(const Tree& t, const SphericalColouring& sc,
                                          std::span<const double> u);

// d = 1: k evenly spaced angles, value >= cos(pi/k) * max_S |D(S)|.
// d >= 2: k directions sampled uniformly with the given seed.
DirectionalWitness sweep_max_imbalance(const Tree& t, const SphericalColouring& sc,
                                       int k = kDefaultDirections, std::uint64_t seed = 0);

// Uniform on S^d (a unit vector in R^(d+1)) by normalising a standard Gaussian.
std::vector<double> sample_sphere(int d, std::mt19937_64& rng);

double log_beta(double a, double b);
double beta(double a, double b);

// Density on [-1,1] of one coordinate of a uniform point on S^(d-1) in R^d:
// (1-x^2)^((d-3)/2) / B((d-1)/2, 1/2). Requires d >= 2.
double marginal_density(int d, double x);

// l / (d B(d/2, 1/2)).
double beta_bound(int d, int leaves);

// E|v.e_1| for v uniform on S^d, i.e. 2 / (d B(d/2, 1/2)).
double mean_abs_projection(int d);

struct ProjectionReport {
  DirectionalWitness witness;
  std::vector<double> best_direction;  // sampled v with the largest D_v
  double best_mass = 0.0;              // D_v = sum over leaf edges of |v.f(e)|
  double mean_mass = 0.0;              // mean of D_v over all samples
  bool positive_side = true;           // witness is T_v (true) or T'_v (false)
};

// Samples directions v, keeps the one maximising D_v and returns the better of
// T_v = T - {leaf edges with v.f <= 0} and T'_v = T - {leaf edges with v.f > 0}.
ProjectionReport projection_witness(const Tree& t, const SphericalColouring& sc, int samples,
                                    std::uint64_t seed);

// Colour j -> (cos 2 pi j / r, sin 2 pi j / r).
SphericalColouring roots_of_unity_embedding(const Colouring& c);

SphericalColouring random_spherical_colouring(int edges, int d, std::uint64_t seed);
SphericalColouring colouring_from_angles(std::span<const double> angles);

// Angle pi * i * (l+1) / l for the i-th edge in depth-first order from vertex 0.
// On a star with an odd number of leaves this is the l-th roots of unity.
std::vector<double> spread_angles(const Tree& t);

struct LocalSearchResult {
  SphericalColouring colouring;
  double value;
  double ell_over_pi;
  double conjectured;  // 1 / (2 sin(pi / 2l))
};

// Coordinate descent on edge angles minimising the 720-direction sweep.
// Restart 0 starts from spread_angles, later restarts from seeded random
// angles; only strict improvements are accepted.
LocalSearchResult complex_local_search(const Tree& t, int iterations, int restarts,
                                       std::uint64_t seed, int k = kDefaultDirections);

// One row of d+1 floats per edge.
SphericalColouring parse_spherical_colouring(std::string_view text);
std::string emit_spherical_colouring(const SphericalColouring& sc);

}  // namespace subdisc
