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

#include "subdisc/highdim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "subdisc/subtree_dp.hpp"

namespace subdisc {

SphericalColouring::SphericalColouring(int d, std::vector<double> flat) : d_(d), data_(std::move(flat)) {
  if (d_ < 1) fail(ErrorKind::ParamOutOfRange, "dimension must be >= 1");
  if (data_.size() % static_cast<std::size_t>(width()) != 0) {
    fail(ErrorKind::LengthMismatch, "flat data is not a whole number of rows");
  }
  for (EdgeId e = 0; e < size(); ++e) {
    const double len = norm((*this)[e]);
    if (!(std::abs(len - 1.0) <= kUnitTolerance)) {
      fail(ErrorKind::NonUnitDirection, "vector of edge " + std::to_string(e) + " has norm " +
                                            std::to_string(len));
    }
  }
}

SphericalColouring SphericalColouring::from_rows(int d, const std::vector<std::vector<double>>& rows) {
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d + 1) {
      fail(ErrorKind::LengthMismatch, "row width must be d+1");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return SphericalColouring(d, std::move(flat));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

std::vector<double> vector_sum(const SphericalColouring& sc, std::span<const EdgeId> edges) {
  std::vector<double> out(static_cast<std::size_t>(sc.width()), 0.0);
  for (EdgeId e : edges) {
    auto f = sc[e];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += f[i];
  }
  return out;
}

namespace {

void check_size(const Tree& t, const SphericalColouring& sc) {
  if (sc.size() != t.edge_count()) fail(ErrorKind::LengthMismatch, "one vector per edge expected");
}

// Value-only max-weight subtree: every subtree has a unique top vertex in the
// rooting, so the optimum is the largest down value.
class DownPass {
 public:
  explicit DownPass(const Tree& t) : rooting_(root_at(t, 0)), down_(rooting_.order.size()) {}

  double best(std::span<const double> weights, double sign) {
    std::fill(down_.begin(), down_.end(), 0.0);
    double top = 0.0;
    for (auto it = rooting_.order.rbegin(); it != rooting_.order.rend(); ++it) {
      const Vertex v = *it;
      top = std::max(top, down_[v]);
      const Vertex p = rooting_.parent[v];
      if (p < 0) continue;
      down_[p] += std::max(0.0, sign * weights[rooting_.parent_edge[v]] + down_[v]);
    }
    return top;
  }

 private:
  Rooting rooting_;
  std::vector<double> down_;
};

std::vector<double> projections(const SphericalColouring& sc, std::span<const double> u) {
  std::vector<double> w(static_cast<std::size_t>(sc.size()));
  for (EdgeId e = 0; e < sc.size(); ++e) w[e] = dot(u, sc[e]);
  return w;
}

std::vector<std::vector<double>> sweep_directions(int d, int k, std::uint64_t seed) {
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(k));
  if (d == 1) {
    for (int i = 0; i < k; ++i) {
      const double phi = 2.0 * std::numbers::pi * i / k;
      out.push_back({std::cos(phi), std::sin(phi)});
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < k; ++i) out.push_back(sample_sphere(d, rng));
  }
  return out;
}

}  // namespace

DirectionalWitness imbalance_in_direction(const Tree& t, const SphericalColouring& sc,
                                          std::span<const double> u) {
  check_size(t, sc);
  if (static_cast<int>(u.size()) != sc.width()) fail(ErrorKind::LengthMismatch, "direction width");
  if (!(std::abs(norm(u) - 1.0) <= kUnitTolerance)) {
    fail(ErrorKind::NonUnitDirection, "direction must be a unit vector");
  }
  std::vector<double> w = projections(sc, u);
  DirectionalWitness best;
  best.value = -1.0;
  for (double sign : {1.0, -1.0}) {
    std::vector<double> signed_w(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) signed_w[i] = sign * w[i];
    WeightedSubtree s = max_weight_subtree(t, signed_w);
    if (s.value > best.value) {
      best.value = s.value;
      best.edge_ids = std::move(s.edge_ids);
      best.direction.assign(u.begin(), u.end());
      for (double& x : best.direction) x *= sign;
    }
  }
  best.value = dot(best.direction, vector_sum(sc, best.edge_ids));
  return best;
}

DirectionalWitness sweep_max_imbalance(const Tree& t, const SphericalColouring& sc, int k,
                                       std::uint64_t seed) {
  check_size(t, sc);
  if (k < 1) fail(ErrorKind::ParamOutOfRange, "need at least one direction");
  const auto directions = sweep_directions(sc.dimension(), k, seed);
  DownPass pass(t);
  std::size_t best_index = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const std::vector<double> w = projections(sc, directions[i]);
    const double value = std::max(pass.best(w, 1.0), pass.best(w, -1.0));
    if (value > best_value) {
      best_value = value;
      best_index = i;
    }
  }
  return imbalance_in_direction(t, sc, directions[best_index]);
}

std::vector<double> sample_sphere(int d, std::mt19937_64& rng) {
  if (d < 1) fail(ErrorKind::ParamOutOfRange, "dimension must be >= 1");
  std::normal_distribution<double> gauss;
  std::vector<double> v(static_cast<std::size_t>(d + 1));
  double len = 0.0;
  while (len < 1e-150) {
    for (double& x : v) x = gauss(rng);
    len = norm(v);
  }
  for (double& x : v) x /= len;
  return v;
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double marginal_density(int d, double x) {
  if (d < 2) fail(ErrorKind::ParamOutOfRange, "marginal density needs d >= 2");
  if (!(std::abs(x) <= 1.0)) fail(ErrorKind::DomainError, "x must lie in [-1, 1]");
  const double exponent = (d - 3) / 2.0;
  const double base = 1.0 - x * x;
  if (base == 0.0) {
    if (exponent > 0) return 0.0;
    if (exponent == 0) return 1.0 / beta((d - 1) / 2.0, 0.5);
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(exponent * std::log(base) - log_beta((d - 1) / 2.0, 0.5));
}

double beta_bound(int d, int leaves) {
  if (d < 1 || leaves < 2) fail(ErrorKind::ParamOutOfRange, "need d >= 1 and l >= 2");
  return leaves / (d * beta(d / 2.0, 0.5));
}

double mean_abs_projection(int d) {
  if (d < 1) fail(ErrorKind::ParamOutOfRange, "dimension must be >= 1");
  return 2.0 / (d * beta(d / 2.0, 0.5));
}

ProjectionReport projection_witness(const Tree& t, const SphericalColouring& sc, int samples,
                                    std::uint64_t seed) {
  check_size(t, sc);
  if (samples < 1) fail(ErrorKind::ParamOutOfRange, "need at least one sample");
  std::vector<EdgeId> leaf_edges;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (t.degree(t.edge(e).u) == 1 || t.degree(t.edge(e).v) == 1) leaf_edges.push_back(e);
  }
  std::mt19937_64 rng(seed);
  ProjectionReport report;
  double total = 0.0;
  report.best_mass = -1.0;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> v = sample_sphere(sc.dimension(), rng);
    double mass = 0.0;
    for (EdgeId e : leaf_edges) mass += std::abs(dot(v, sc[e]));
    total += mass;
    if (mass > report.best_mass) {
      report.best_mass = mass;
      report.best_direction = std::move(v);
    }
  }
  report.mean_mass = total / samples;

  const std::vector<double>& v = report.best_direction;
  std::vector<char> drop_positive(static_cast<std::size_t>(t.edge_count()), 0);
  std::vector<char> drop_negative(static_cast<std::size_t>(t.edge_count()), 0);
  for (EdgeId e : leaf_edges) {
    (dot(v, sc[e]) > 0 ? drop_positive : drop_negative)[e] = 1;
  }
  std::vector<EdgeId> keep_positive;  // T_v
  std::vector<EdgeId> keep_negative;  // T'_v
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (!drop_negative[e]) keep_positive.push_back(e);
    if (!drop_positive[e]) keep_negative.push_back(e);
  }
  const double a = dot(v, vector_sum(sc, keep_positive));
  const double b = dot(v, vector_sum(sc, keep_negative));
  report.positive_side = std::abs(a) >= std::abs(b);
  const double chosen = report.positive_side ? a : b;
  report.witness.edge_ids = report.positive_side ? keep_positive : keep_negative;
  report.witness.direction = v;
  if (chosen < 0) {
    for (double& x : report.witness.direction) x = -x;
  }
  report.witness.value = dot(report.witness.direction, vector_sum(sc, report.witness.edge_ids));
  return report;
}

SphericalColouring roots_of_unity_embedding(const Colouring& c) {
  std::vector<double> flat;
  flat.reserve(2 * static_cast<std::size_t>(c.size()));
  for (int j : c.assignment()) {
    const double phi = 2.0 * std::numbers::pi * j / c.colours();
    flat.push_back(std::cos(phi));
    flat.push_back(std::sin(phi));
  }
  return SphericalColouring(1, std::move(flat));
}

SphericalColouring random_spherical_colouring(int edges, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> flat;
  for (int e = 0; e < edges; ++e) {
    auto v = sample_sphere(d, rng);
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return SphericalColouring(d, std::move(flat));
}

SphericalColouring colouring_from_angles(std::span<const double> angles) {
  std::vector<double> flat;
  flat.reserve(2 * angles.size());
  for (double phi : angles) {
    flat.push_back(std::cos(phi));
    flat.push_back(std::sin(phi));
  }
  return SphericalColouring(1, std::move(flat));
}

std::vector<double> spread_angles(const Tree& t) {
  const double l = t.leaf_count();
  std::vector<double> angles(static_cast<std::size_t>(t.edge_count()), 0.0);
  std::vector<std::pair<Vertex, Vertex>> stack = {{0, -1}};
  int index = 0;
  while (!stack.empty()) {
    auto [x, from] = stack.back();
    stack.pop_back();
    auto nb = t.neighbours(x);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      if (it->neighbour == from) continue;
      stack.emplace_back(it->neighbour, x);
    }
    if (from >= 0) {
      for (const Incidence& inc : t.neighbours(x)) {
        if (inc.neighbour == from) {
          angles[inc.edge] = std::numbers::pi * index * (l + 1) / l;
          ++index;
        }
      }
    }
  }
  return angles;
}

LocalSearchResult complex_local_search(const Tree& t, int iterations, int restarts,
                                       std::uint64_t seed, int k) {
  if (iterations < 0 || restarts < 1) {
    fail(ErrorKind::ParamOutOfRange, "need iterations >= 0 and restarts >= 1");
  }
  const std::size_t m = static_cast<std::size_t>(t.edge_count());
  DownPass pass(t);
  const auto directions = sweep_directions(1, k, 0);
  auto evaluate = [&](const std::vector<double>& angles) {
    double best = 0.0;
    std::vector<double> w(m);
    for (const auto& u : directions) {
      for (std::size_t e = 0; e < m; ++e) w[e] = u[0] * std::cos(angles[e]) + u[1] * std::sin(angles[e]);
      best = std::max({best, pass.best(w, 1.0), pass.best(w, -1.0)});
    }
    return best;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> best_angles;
  double best_value = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<double> angles(m);
    if (restart == 0) {
      angles = spread_angles(t);
    } else {
      for (double& a : angles) a = angle(rng);
    }
    double value = evaluate(angles);
    double step = std::numbers::pi / 2;
    for (int it = 0; it < iterations && step > 1e-6; ++it) {
      bool improved = false;
      for (std::size_t e = 0; e < m; ++e) {
        for (double delta : {step, -step}) {
          const double saved = angles[e];
          angles[e] = saved + delta;
          const double trial = evaluate(angles);
          if (trial < value - 1e-12) {
            value = trial;
            improved = true;
            break;
          }
          angles[e] = saved;
        }
      }
      if (!improved) step /= 2;
    }
    if (value < best_value) {
      best_value = value;
      best_angles = angles;
    }
  }
  const SphericalColouring sc = colouring_from_angles(best_angles);
  const double l = t.leaf_count();
  return {sc, sweep_max_imbalance(t, sc, k).value, l / std::numbers::pi,
          1.0 / (2.0 * std::sin(std::numbers::pi / (2.0 * l)))};
}

SphericalColouring parse_spherical_colouring(std::string_view text) {
  std::vector<double> flat;
  int width = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::vector<double> values;
    double x = 0.0;
    while (row >> x) values.push_back(x);
    if (!row.eof()) fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad number");
    if (width < 0) width = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != width || width < 2) {
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": inconsistent row width");
    }
    flat.insert(flat.end(), values.begin(), values.end());
  }
  if (width < 0) fail(ErrorKind::ParseError, "no vectors");
  return SphericalColouring(width - 1, std::move(flat));
}

std::string emit_spherical_colouring(const SphericalColouring& sc) {
  std::ostringstream out;
  out.precision(17);
  for (EdgeId e = 0; e < sc.size(); ++e) {
    auto f = sc[e];
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace subdisc
