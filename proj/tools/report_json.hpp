/*
   Copyright 2026 The maxmult Authors

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


// JSON encodings of the library's reports. Integers only.

#ifndef MAXMULT_REPORT_JSON_HPP
#define MAXMULT_REPORT_JSON_HPP

#include <json.hpp>

#include "maxmult/acceptance.hpp"

namespace maxmult::report {

using nlohmann::ordered_json;

inline ordered_json polys(const std::vector<Polynomial>& ps) {
  ordered_json out = ordered_json::array();
  for (const auto& p : ps) out.push_back(format_polynomial(p));
  return out;
}

inline ordered_json ideal(const Ideal& I) { return polys(I.generators()); }

inline ordered_json to_json(const IdealProfile& p) {
  return {{"dim", p.dim}, {"height", p.height}, {"multiplicity", p.multiplicity}, {"isHomogeneous", p.is_homogeneous}};
}

inline ordered_json to_json(const HilbertSeries& hs) {
  return {{"numerator", hs.numerator}, {"dimension", hs.dimension}};
}

inline ordered_json to_json(const SocleProfile& s) {
  ordered_json per = ordered_json::object();
  for (const auto& [deg, dim] : s.per_degree) per[std::to_string(deg)] = dim;
  return {{"perDegree", per}, {"minDegree", s.min_degree}, {"totalDim", s.total_dim},
          {"witness", format_polynomial(s.witness)}};
}

inline ordered_json to_json(const DecompositionReport& r) {
  ordered_json j{{"J", ideal(r.J)},
                 {"F", format_polynomial(r.F)},
                 {"g", r.g},
                 {"dim", r.dim},
                 {"e_J", r.e_J},
                 {"e_I", r.e_I},
                 {"s", r.s},
                 {"c", r.s - r.dim},
                 {"delta", r.delta},
                 {"boundRHS", r.bound_rhs},
                 {"boundHolds", r.bound_holds},
                 {"isMaximal", r.is_maximal},
                 {"jSocleType", to_string(r.j_socle_type)}};
  j["depthClass"] = r.depth_class ? ordered_json(to_string(*r.depth_class)) : ordered_json(nullptr);
  j["depth"] = r.depth ? ordered_json(*r.depth) : ordered_json(nullptr);
  j["iCohenMacaulay"] = r.i_cohen_macaulay ? ordered_json(*r.i_cohen_macaulay) : ordered_json(nullptr);
  j["verified"] = r.verified;
  j["findings"] = r.findings;
  return j;
}

inline ordered_json to_json(const ColonStructure& c) {
  ordered_json j{{"colon", ideal(c.colon)}, {"matches", c.matches}, {"linearForms", polys(c.linear_forms)}};
  j["q"] = c.q ? ordered_json(format_polynomial(*c.q)) : ordered_json(nullptr);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline ordered_json to_json(const CharConstruction& c) {
  ordered_json j{{"outcome", c.outcome == CharConstruction::Outcome::constructed ? "constructed" : "trivial"},
                 {"Cprime", ideal(c.Cprime)},
                 {"g", c.g},
                 {"e_Cprime", c.e_Cprime},
                 {"s_I", c.s_I}};
  j["F"] = c.F ? ordered_json(format_polynomial(*c.F)) : ordered_json(nullptr);
  j["delta"] = c.delta;
  j["conditionRHS"] = c.condition_rhs;
  j["decomposition"] = c.decomposition ? to_json(*c.decomposition) : ordered_json(nullptr);
  j["verified"] = c.verified;
  j["findings"] = c.findings;
  return j;
}

inline ordered_json to_json(const LinkRecord& r) {
  return {{"G", ideal(r.G)}, {"L", ideal(r.L)},       {"height", r.height},
          {"e_G", r.e_G},    {"e_I_un", r.e_I_un},    {"e_L", r.e_L},
          {"identityHolds", r.identity_holds}};
}

inline ordered_json to_json(const QGReport& q) {
  return {{"G", ideal(q.G)},
          {"h", format_polynomial(q.h)},
          {"Q", ideal(q.Q)},
          {"a_G", q.a_G},
          {"aInvariant", q.a_invariant},
          {"dimQ", q.dim_Q},
          {"e_Q", q.e_Q},
          {"boundRHS", q.bound_rhs},
          {"boundHolds", q.bound_holds},
          {"equality", q.equality},
          {"cohenMacaulay", q.cohen_macaulay},
          {"socleDim", q.socle_dim},
          {"gorensteinVerified", q.gorenstein_verified},
          {"verified", q.verified},
          {"findings", q.findings}};
}

inline ordered_json to_json(const DichotomyReport& d) {
  return {{"J", ideal(d.J)},           {"F", format_polynomial(d.F)},
          {"e_J", d.e_J},              {"e_I", d.e_I},
          {"s", d.s},                  {"delta", d.delta},
          {"maximal", d.maximal},      {"unitMultiplicity", d.unit_multiplicity},
          {"unmixed", d.unmixed},      {"cohenMacaulay", d.cohen_macaulay},
          {"depth", d.depth},          {"dim", d.dim},
          {"verified", d.verified},    {"findings", d.findings}};
}

inline ordered_json to_json(const CriterionResult& r, bool with_timing) {
  ordered_json j{{"id", r.id}, {"title", r.title}, {"status", to_string(r.status)}, {"detail", r.detail}};
  if (with_timing) {
    j["elapsedMs"] = r.elapsed_ms;
    j["limitMs"] = r.limit_ms;
  }
  return j;
}

}  // namespace maxmult::report

#endif  // MAXMULT_REPORT_JSON_HPP
