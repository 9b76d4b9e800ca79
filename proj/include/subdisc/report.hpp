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

#include "json.hpp"
#include "subdisc/highdim.hpp"
#include "subdisc/multicolour.hpp"
#include "subdisc/oracle.hpp"
#include "subdisc/oriented.hpp"

namespace subdisc {

using Json = nlohmann::ordered_json;

Json to_json(const SubtreeWitness& w);
Json to_json(const RootedWitness& w);
Json to_json(const DirectionalWitness& w);
Json to_json(const ColouringCertificate& c);
Json to_json(const ExactResult& r);
Json to_json(const ExactOrientedResult& r);
Json to_json(const ProjectionReport& p);
Json to_json(const LocalSearchResult& s);

}  // namespace subdisc
