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

#include "subdisc/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <thread>

#include "CLI11.hpp"
#include "subdisc/report.hpp"
#include "subdisc/tree_io.hpp"

namespace subdisc {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 0;
  std::string emit = "edges";
  std::string tree_path;
  std::string colouring_path;
  int r = 2;
  bool oriented = false;
  double budget_bits = ExactOptions{}.budget_bits;
  int oriented_budget = ExactOptions{}.oriented_budget;
  bool no_prune = false;
  int n_max = 8;
  std::vector<int> r_set = {2};
  int oriented_n_max = 0;
  int workers = 0;
  int d = 1;
  int ell = 2;
  int samples = 10000;
  int iterations = 50;
  int restarts = 3;
  int directions = kDefaultDirections;
};

Tree load_tree(const std::string& path) {
  if (path == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return parse_edge_list(text);
  }
  return parse_edge_list(read_file(path));
}

void need_params(const Config& cfg, std::size_t count, const char* usage) {
  if (cfg.params.size() != count) {
    throw UsageError(std::string("generate ") + cfg.family + " expects " + usage);
  }
}

Json tree_json(const Tree& t) {
  Json edges = Json::array();
  for (const Edge& e : t.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", t.vertex_count()}, {"leaves", t.leaf_count()}, {"edges", edges}};
}

int cmd_generate(const Config& cfg, bool seeded, std::ostream& out, std::ostream& err) {
  const auto& p = cfg.params;
  Tree t = family::path(2);
  if (cfg.family == "path") {
    need_params(cfg, 1, "<n>");
    t = family::path(p[0]);
  } else if (cfg.family == "star") {
    need_params(cfg, 1, "<leaves>");
    t = family::star(p[0]);
  } else if (cfg.family == "spider") {
    need_params(cfg, 2, "<leg-length> <leaves>");
    t = family::spider(p[0], p[1]);
  } else if (cfg.family == "caterpillar") {
    need_params(cfg, 2, "<spine> <legs>");
    t = family::caterpillar(p[0], p[1]);
  } else if (cfg.family == "random") {
    need_params(cfg, 1, "<n> --seed S");
    if (!seeded) throw UsageError("generate random requires --seed");
    t = family::random_tree(p[0], cfg.seed);
  } else {
    need_params(cfg, 2, "<rows> <cols>");
    const Graph g = grid_plus(p[0], p[1]);
    t = leafy_spanning_tree(g);
    err << "grid " << p[0] << "x" << p[1] << ": target leaves " << (p[0] * p[1] + 3) / 4 + 2 << '\n';
  }
  err << "n=" << t.vertex_count() << " leaves=" << t.leaf_count() << '\n';
  if (cfg.emit == "dot") {
    out << emit_dot(t);
  } else if (cfg.emit == "json") {
    out << tree_json(t).dump(2) << '\n';
  } else {
    out << emit_edge_list(t);
  }
  return kExitOk;
}

int cmd_colour(const Config& cfg, std::ostream& out) {
  const Tree t = load_tree(cfg.tree_path);
  const Colouring c = colour_tree(t, cfg.r);
  if (cfg.emit == "dot") {
    out << emit_dot(t, c.assignment());
    return kExitOk;
  }
  const ColouringCertificate cert = certify_colouring(t, c);
  Json report = to_json(cert);
  report["lower_bound_witness"] = to_json(lower_bound_witness(t, c).witness);
  report["colouring"] = std::vector<int>(c.assignment().begin(), c.assignment().end());
  out << report.dump(2) << '\n';
  return cert.achieved <= cert.upper ? kExitOk : kExitViolation;
}

int cmd_orient(const Config& cfg, std::ostream& out) {
  const Tree t = load_tree(cfg.tree_path);
  const Orientation o = orient_tree(t);
  if (cfg.emit == "dot") {
    out << emit_dot(t, {}, o.bits());
    return kExitOk;
  }
  const OrientedProfiles p = oriented_profiles(t, o);
  std::int64_t certificate = 0;
  for (std::size_t v = 0; v < p.away.size(); ++v) certificate = std::max(certificate, p.away[v] + p.toward[v]);
  const int ell = t.leaf_count();
  const RootedWitness w = oriented_imbalance(t, o);
  Json report{{"ell", ell},
              {"achieved", w.value},
              {"lower", (ell + 1) / 2 + 1},
              {"upper", ell},
              {"max_away_plus_toward", certificate},
              {"certified", certificate <= ell},
              {"witness", to_json(w)}};
  if (t.vertex_count() >= 3) report["lower_bound_witness"] = to_json(oriented_lower_bound_witness(t, o));
  report["orientation"] = std::vector<int>(o.bits().begin(), o.bits().end());
  out << report.dump(2) << '\n';
  return certificate <= ell ? kExitOk : kExitViolation;
}

ExactOptions exact_options(const Config& cfg) {
  ExactOptions options;
  options.budget_bits = cfg.budget_bits;
  options.oriented_budget = cfg.oriented_budget;
  options.prune = !cfg.no_prune;
  return options;
}

int cmd_exact(const Config& cfg, std::ostream& out) {
  const Tree t = load_tree(cfg.tree_path);
  const int ell = t.leaf_count();
  Json report;
  if (cfg.oriented) {
    const ExactOrientedResult res = exact_oriented_discrepancy(t, exact_options(cfg));
    report = Json{{"mode", "oriented"}, {"ell", ell}, {"lower", (ell + 1) / 2 + 1}, {"upper", ell}};
    report.update(to_json(res));
  } else {
    const ExactResult res = exact_discrepancy(t, cfg.r, exact_options(cfg));
    report = Json{{"mode", "colour"},
                  {"r", cfg.r},
                  {"ell", ell},
                  {"lower", lower_bound(ell, cfg.r)},
                  {"upper", upper_bound(ell, cfg.r)}};
    report.update(to_json(res));
  }
  out << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.n_max = cfg.n_max;
  options.r_set = cfg.r_set;
  options.oriented_n_max = cfg.oriented_n_max;
  options.workers = cfg.workers > 0 ? cfg.workers
                                    : std::max(1U, std::thread::hardware_concurrency());
  options.exact = exact_options(cfg);
  const VerifyReport report = verify_theorems(options);
  out << to_csv(report);
  for (const auto& [mode, gaps] : report.lower_gaps) {
    err << mode << " exact-lower:";
    for (auto [gap, count] : gaps) err << ' ' << gap << 'x' << count;
    err << " | upper-exact:";
    for (auto [gap, count] : report.upper_gaps.at(mode)) err << ' ' << gap << 'x' << count;
    err << '\n';
  }
  err << "rows=" << report.rows.size() << " violations=" << report.violations << '\n';
  return report.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_highdim_bound(const Config& cfg, std::ostream& out) {
  out << Json{{"d", cfg.d}, {"ell", cfg.ell}, {"beta_bound", beta_bound(cfg.d, cfg.ell)}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_highdim_witness(const Config& cfg, std::ostream& out) {
  const Tree t = load_tree(cfg.tree_path);
  const SphericalColouring sc = cfg.colouring_path.empty()
                                    ? random_spherical_colouring(t.edge_count(), cfg.d, cfg.seed)
                                    : parse_spherical_colouring(read_file(cfg.colouring_path));
  const ProjectionReport rep = projection_witness(t, sc, cfg.samples, cfg.seed);
  const double guarantee = rep.best_mass / 2;
  Json report{{"d", sc.dimension()},
              {"ell", t.leaf_count()},
              {"beta_bound", beta_bound(sc.dimension(), t.leaf_count())},
              {"achieved", rep.witness.value},
              {"guarantee", guarantee}};
  report.update(to_json(rep));
  out << report.dump(2) << '\n';
  return rep.witness.value >= guarantee - kWitnessTolerance ? kExitOk : kExitViolation;
}

int cmd_highdim_search(const Config& cfg, std::ostream& out) {
  const Tree t = load_tree(cfg.tree_path);
  const LocalSearchResult res =
      complex_local_search(t, cfg.iterations, cfg.restarts, cfg.seed, cfg.directions);
  Json report{{"d", 1}, {"ell", t.leaf_count()}, {"beta_bound", beta_bound(1, t.leaf_count())},
              {"achieved", res.value}};
  report.update(to_json(res));
  out << report.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subtree discrepancy: colourings, orientations, oracles and sweeps", "subdisc"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("generate", "Emit a tree (edge list, dot or json); leaf count on stderr");
  gen->add_option("family", cfg.family, "path|star|spider|random|caterpillar|grid-span")
      ->required()
      ->check(CLI::IsMember({"path", "star", "spider", "random", "caterpillar", "grid-span"}));
  gen->add_option("params", cfg.params, "Family parameters");
  auto* gen_seed = gen->add_option("--seed", cfg.seed, "Seed (required for random)");
  gen->add_option("--emit", cfg.emit, "edges|dot|json")->check(CLI::IsMember({"edges", "dot", "json"}))
      ->capture_default_str();

  auto* colour = app.add_subcommand("colour", "Colour with the leaf-path algorithm and certify it");
  colour->add_option("tree", cfg.tree_path, "Edge-list file, - for stdin")->required();
  colour->add_option("--r", cfg.r, "Number of colours")->required()->check(CLI::Range(2, 1 << 20));
  colour->add_option("--emit", cfg.emit, "json|dot")->check(CLI::IsMember({"json", "dot", "edges"}));

  auto* orient = app.add_subcommand("orient", "Orient with the leaf-path algorithm and certify it");
  orient->add_option("tree", cfg.tree_path, "Edge-list file, - for stdin")->required();
  orient->add_option("--emit", cfg.emit, "json|dot")->check(CLI::IsMember({"json", "dot", "edges"}));

  auto* exact = app.add_subcommand("exact", "Exact discrepancy by exhaustive search");
  exact->add_option("tree", cfg.tree_path, "Edge-list file, - for stdin")->required();
  auto* exact_r = exact->add_option("--r", cfg.r, "Number of colours")->check(CLI::Range(2, 1 << 20));
  auto* exact_oriented = exact->add_flag("--oriented", cfg.oriented, "Oriented discrepancy");
  exact_r->excludes(exact_oriented);
  exact->add_option("--budget", cfg.budget_bits, "Colour search budget in bits (m log2 r)")
      ->capture_default_str();
  exact->add_option("--oriented-budget", cfg.oriented_budget, "Max edges for --oriented")
      ->capture_default_str();
  exact->add_flag("--no-prune", cfg.no_prune, "Disable bound pruning");

  auto* verify = app.add_subcommand("verify", "CSV of exact values over all small trees");
  verify->add_option("--nmax", cfg.n_max, "Largest tree (vertices) for colour rows")->capture_default_str();
  verify->add_option("--r-set", cfg.r_set, "Colour counts, comma separated")->delimiter(',');
  verify->add_option("--oriented-nmax", cfg.oriented_n_max, "Largest tree for oriented rows (0: none)")
      ->capture_default_str();
  verify->add_option("--workers", cfg.workers, "Threads (0: hardware concurrency)")->capture_default_str();
  verify->add_option("--budget", cfg.budget_bits, "Colour search budget in bits")->capture_default_str();

  auto* highdim = app.add_subcommand("highdim", "Unit-vector colourings");
  highdim->require_subcommand(1);
  auto* bound = highdim->add_subcommand("bound", "l / (d B(d/2, 1/2))");
  bound->add_option("--d", cfg.d, "Sphere dimension")->required()->check(CLI::PositiveNumber);
  bound->add_option("--ell", cfg.ell, "Number of leaves")->required()->check(CLI::Range(2, 1 << 30));
  auto* witness = highdim->add_subcommand("witness", "Projection witness for a spherical colouring");
  witness->add_option("tree", cfg.tree_path, "Edge-list file, - for stdin")->required();
  witness->add_option("--d", cfg.d, "Dimension of the random colouring")->capture_default_str();
  witness->add_option("--colouring", cfg.colouring_path, "File with one unit vector per edge");
  witness->add_option("--samples", cfg.samples, "Sampled directions")->capture_default_str();
  witness->add_option("--seed", cfg.seed, "Seed")->required();
  auto* search = highdim->add_subcommand("search", "Local search for low-discrepancy angle colourings");
  search->add_option("tree", cfg.tree_path, "Edge-list file, - for stdin")->required();
  search->add_option("--iterations", cfg.iterations, "Passes per restart")->capture_default_str();
  search->add_option("--restarts", cfg.restarts, "Restarts")->capture_default_str();
  search->add_option("--directions", cfg.directions, "Sweep directions")->capture_default_str();
  search->add_option("--seed", cfg.seed, "Seed")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(cfg, gen_seed->count() > 0, out, err);
    if (*colour) return cmd_colour(cfg, out);
    if (*orient) return cmd_orient(cfg, out);
    if (*exact) {
      if (!cfg.oriented && exact_r->count() == 0) throw UsageError("exact needs --r R or --oriented");
      return cmd_exact(cfg, out);
    }
    if (*verify) return cmd_verify(cfg, out, err);
    if (*bound) return cmd_highdim_bound(cfg, out);
    if (*witness) return cmd_highdim_witness(cfg, out);
    return cmd_highdim_search(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitUsage;
  }
}

}  // namespace subdisc
