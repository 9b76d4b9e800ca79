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

#include "subdisc/report.hpp"

#include <vector>

namespace subdisc {

Json to_json(const SubtreeWitness& w) {
  return Json{{"edge_ids", w.edge_ids},
              {"anchor", w.anchor},
              {"colour", w.colour},
              {"value", w.value},
              {"deficit", w.deficit}};
}

Json to_json(const RootedWitness& w) {
  return Json{{"edge_ids", w.edge_ids}, {"root", w.root}, {"value", w.value}};
}

Json to_json(const DirectionalWitness& w) {
  return Json{{"edge_ids", w.edge_ids}, {"direction", w.direction}, {"value", w.value}};
}

Json to_json(const ColouringCertificate& c) {
  return Json{{"ell", c.leaves},
              {"r", c.r},
              {"achieved", c.achieved},
              {"lower", c.lower},
              {"upper", c.upper},
              {"dominated", c.all_dominated},
              {"witness", to_json(c.witness)}};
}

Json to_json(const ExactResult& r) {
  const auto a = r.optimal.assignment();
  return Json{{"value", r.value},
              {"colouring", std::vector<int>(a.begin(), a.end())},
              {"search_size", r.search_size}};
}

Json to_json(const ExactOrientedResult& r) {
  std::vector<int> bits(r.optimal.bits().begin(), r.optimal.bits().end());
  return Json{{"value", r.value}, {"orientation", bits}, {"search_size", r.search_size}};
}

Json to_json(const ProjectionReport& p) {
  return Json{{"witness", to_json(p.witness)},
              {"best_direction", p.best_direction},
              {"best_mass", p.best_mass},
              {"mean_mass", p.mean_mass},
              {"side", p.positive_side ? "T_v" : "T'_v"}};
}

Json to_json(const LocalSearchResult& s) {
  Json vectors = Json::array();
  for (EdgeId e = 0; e < s.colouring.size(); ++e) {
    auto f = s.colouring[e];
    vectors.push_back(std::vector<double>(f.begin(), f.end()));
  }
  return Json{{"value", s.value},
              {"ell_over_pi", s.ell_over_pi},
              {"conjectured", s.conjectured},
              {"vectors", vectors}};
}

}  // namespace subdisc
