/*
  ellcot — elliptic generalized cotangent Dirichlet series and
  elliptic Dedekind-Rademacher sums, with a numerical verification CLI

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/
#ifndef ELLCOT_REPORT_JSON_HPP
#define ELLCOT_REPORT_JSON_HPP

#include <json.hpp>

#include "ellcot/verify.hpp"

namespace ellcot {

/// Stable-schema JSON for one report; deterministic for a fixed policy
/// except for elapsed_ms.
inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity_id"] = r.identity_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v; // std::map iterates sorted
    j["params"] = params;
    j["lhs"] = {r.lhs.real(), r.lhs.imag()};
    j["rhs"] = {r.rhs.real(), r.rhs.imag()};
    j["abs_residual"] = r.abs_residual;
    j["rel_residual"] = r.rel_residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["terms_used"] = r.terms_used;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r));
    return arr;
}

} // namespace ellcot

#endif
