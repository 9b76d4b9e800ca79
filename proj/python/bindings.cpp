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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subdisc/highdim.hpp"
#include "subdisc/multicolour.hpp"
#include "subdisc/oracle.hpp"
#include "subdisc/oriented.hpp"
#include "subdisc/report.hpp"
#include "subdisc/tree_io.hpp"

namespace py = pybind11;
using namespace subdisc;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

Colouring make_colouring(const std::vector<int>& colours, int r) { return Colouring(r, colours); }

SphericalColouring make_spherical(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) fail(ErrorKind::LengthMismatch, "spherical colouring needs at least one row");
  return SphericalColouring::from_rows(static_cast<int>(rows.front().size()) - 1, rows);
}

std::vector<std::vector<double>> rows_of(const SphericalColouring& sc) {
  std::vector<std::vector<double>> out;
  for (EdgeId e = 0; e < sc.size(); ++e) out.emplace_back(sc[e].begin(), sc[e].end());
  return out;
}

std::vector<std::pair<int, int>> edge_pairs(const Tree& t) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : t.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subtree discrepancy of edge-coloured trees";

  static py::exception<Error> error(m, "SubdiscError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      instance.attr("kind") = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<Tree>(m, "Tree")
      .def(py::init([](const std::vector<std::pair<int, int>>& edges) { return Tree::from_edge_list(edges); }),
           py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_edge_list(text); })
      .def_property_readonly("n", &Tree::vertex_count)
      .def_property_readonly("m", &Tree::edge_count)
      .def_property_readonly("edges", &edge_pairs)
      .def("leaves", &Tree::leaves)
      .def("leaf_count", &Tree::leaf_count)
      .def("degree", &Tree::degree)
      .def("to_edge_list", &emit_edge_list)
      .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
      .def("__repr__", [](const Tree& t) {
        return "Tree(n=" + std::to_string(t.vertex_count()) + ", leaves=" + std::to_string(t.leaf_count()) + ")";
      });

  m.def("path", &family::path, py::arg("n"));
  m.def("star", &family::star, py::arg("leaves"));
  m.def("spider", &family::spider, py::arg("leg_length"), py::arg("leaves"));
  m.def("caterpillar", &family::caterpillar, py::arg("spine"), py::arg("legs"));
  m.def("random_tree", &family::random_tree, py::arg("n"), py::arg("seed"));
  m.def("grid_spanning_tree", [](int rows, int cols) { return leafy_spanning_tree(grid_plus(rows, cols)); },
        py::arg("rows"), py::arg("cols"));
  m.def("enumerate_trees", &enumerate_trees, py::arg("n"));
  m.def("canonical_form", &canonical_form, py::arg("tree"));

  m.def("lower_bound", &lower_bound, py::arg("leaves"), py::arg("r"));
  m.def("upper_bound", &upper_bound, py::arg("leaves"), py::arg("r"));
  m.def("d_vector", [](int r, int leaves) { return d_vector(r, leaves).entries; }, py::arg("r"),
        py::arg("leaves"));

  m.def(
      "colour_tree", [](const Tree& t, int r) {
        const Colouring c = colour_tree(t, r);
        return std::vector<int>(c.assignment().begin(), c.assignment().end());
      },
      py::arg("tree"), py::arg("r"));
  m.def(
      "max_imbalance",
      [](const Tree& t, const std::vector<int>& c, int r) { return to_py(to_json(max_imbalance(t, make_colouring(c, r)))); },
      py::arg("tree"), py::arg("colours"), py::arg("r"));
  m.def(
      "symmetric_max_imbalance",
      [](const Tree& t, const std::vector<int>& c, int r) {
        return to_py(to_json(symmetric_max_imbalance(t, make_colouring(c, r))));
      },
      py::arg("tree"), py::arg("colours"), py::arg("r"));
  m.def(
      "profiles",
      [](const Tree& t, const std::vector<int>& c, int r) {
        std::vector<std::vector<std::int64_t>> out;
        for (const ColourProfile& p : all_profiles(t, make_colouring(c, r))) out.push_back(p.values);
        return out;
      },
      py::arg("tree"), py::arg("colours"), py::arg("r"));
  m.def(
      "certify_colouring",
      [](const Tree& t, const std::vector<int>& c, int r) {
        return to_py(to_json(certify_colouring(t, make_colouring(c, r))));
      },
      py::arg("tree"), py::arg("colours"), py::arg("r"));
  m.def(
      "lower_bound_witness",
      [](const Tree& t, const std::vector<int>& c, int r) {
        const LowerBoundWitness lb = lower_bound_witness(t, make_colouring(c, r));
        Json j = to_json(lb.witness);
        j["per_colour"] = lb.per_colour;
        return to_py(j);
      },
      py::arg("tree"), py::arg("colours"), py::arg("r"));

  m.def(
      "orient_tree",
      [](const Tree& t) {
        const Orientation o = orient_tree(t);
        return std::vector<int>(o.bits().begin(), o.bits().end());
      },
      py::arg("tree"));
  m.def(
      "oriented_imbalance",
      [](const Tree& t, const std::vector<std::uint8_t>& bits) {
        return to_py(to_json(oriented_imbalance(t, Orientation(bits))));
      },
      py::arg("tree"), py::arg("orientation"));

  m.def(
      "exact_discrepancy",
      [](const Tree& t, int r, double budget_bits, bool prune) {
        ExactOptions o;
        o.budget_bits = budget_bits;
        o.prune = prune;
        return to_py(to_json(exact_discrepancy(t, r, o)));
      },
      py::arg("tree"), py::arg("r"), py::arg("budget_bits") = 24.0, py::arg("prune") = true);
  m.def(
      "exact_oriented_discrepancy",
      [](const Tree& t, int max_edges, bool prune) {
        ExactOptions o;
        o.oriented_budget = max_edges;
        o.prune = prune;
        return to_py(to_json(exact_oriented_discrepancy(t, o)));
      },
      py::arg("tree"), py::arg("max_edges") = 22, py::arg("prune") = true);
  m.def(
      "verify",
      [](int n_max, std::vector<int> r_set, int oriented_n_max, int workers) {
        VerifyOptions o;
        o.n_max = n_max;
        o.r_set = std::move(r_set);
        o.oriented_n_max = oriented_n_max;
        o.workers = workers;
        const VerifyReport rep = [&] {
          py::gil_scoped_release release;
          return verify_theorems(o);
        }();
        py::list rows;
        for (const VerifyRow& row : rep.rows) {
          py::dict d;
          d["tree_id"] = row.tree_id;
          d["mode"] = row.mode;
          d["r"] = row.r;
          d["n"] = row.n;
          d["ell"] = row.ell;
          d["exact"] = row.exact;
          d["lower"] = row.lower;
          d["upper"] = row.upper;
          d["ok"] = row.ok;
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["violations"] = rep.violations;
        out["csv"] = to_csv(rep);
        return out;
      },
      py::arg("n_max") = 8, py::arg("r_set") = std::vector<int>{2}, py::arg("oriented_n_max") = 0,
      py::arg("workers") = 1);

  m.def("beta_bound", &beta_bound, py::arg("d"), py::arg("leaves"));
  m.def("marginal_density", &marginal_density, py::arg("d"), py::arg("x"));
  m.def("mean_abs_projection", &mean_abs_projection, py::arg("d"));
  m.def(
      "roots_of_unity_embedding",
      [](const std::vector<int>& c, int r) { return rows_of(roots_of_unity_embedding(make_colouring(c, r))); },
      py::arg("colours"), py::arg("r"));
  m.def(
      "random_spherical_colouring",
      [](int edges, int d, std::uint64_t seed) { return rows_of(random_spherical_colouring(edges, d, seed)); },
      py::arg("edges"), py::arg("d"), py::arg("seed"));
  m.def(
      "sweep_max_imbalance",
      [](const Tree& t, const std::vector<std::vector<double>>& rows, int k, std::uint64_t seed) {
        return to_py(to_json(sweep_max_imbalance(t, make_spherical(rows), k, seed)));
      },
      py::arg("tree"), py::arg("vectors"), py::arg("k") = kDefaultDirections, py::arg("seed") = 0);
  m.def(
      "projection_witness",
      [](const Tree& t, const std::vector<std::vector<double>>& rows, int samples, std::uint64_t seed) {
        return to_py(to_json(projection_witness(t, make_spherical(rows), samples, seed)));
      },
      py::arg("tree"), py::arg("vectors"), py::arg("samples"), py::arg("seed"));
  m.def(
      "complex_local_search",
      [](const Tree& t, int iterations, int restarts, std::uint64_t seed) {
        return to_py(to_json(complex_local_search(t, iterations, restarts, seed)));
      },
      py::arg("tree"), py::arg("iterations") = 50, py::arg("restarts") = 3, py::arg("seed") = 0);
}
