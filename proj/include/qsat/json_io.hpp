// Copyright 2026 The qsat Authors
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

/*!
  \file json_io.hpp
  \brief JSON views of results.  Every document carries
         "schema": "qsat/1".
*/

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qsat/bench.hpp"
#include "qsat/clause_gen.hpp"
#include "qsat/grover.hpp"
#include "qsat/oracle.hpp"
#include "qsat/transpile.hpp"

namespace qsat {

inline constexpr const char* json_schema = "qsat/1";

inline nlohmann::json to_json(const ResourceReport& r) {
  return {{"q", r.q}, {"gi", r.gi}, {"cx", r.cx}, {"u", r.u}, {"depth", r.depth}};
}

inline nlohmann::json to_json(const OracleReport& r, const ClauseNetwork& cn) {
  nlohmann::json cexs = nlohmann::json::array();
  for (const auto& c : r.cex_list) cexs.push_back(c.to_bitstring());
  return {{"schema", json_schema},
          {"variables", cn.variables()},
          {"cex_count", r.cex_count},
          {"equivalent", r.equivalent},
          {"cexs", cexs}};
}

inline nlohmann::json to_json(const QsatResult& r, const ClauseNetwork& cn) {
  nlohmann::json cexs = nlohmann::json::array();
  for (const auto& c : r.cexs) {
    cexs.push_back({{"bits", c.record.to_bitstring()},
                    {"frequency", c.frequency},
                    {"confirmed", c.confirmed},
                    {"verified", check_cex(cn.without_exclusions(), c.record)}});
  }
  return {{"schema", json_schema},
          {"verdict", to_string(r.verdict)},
          {"inconclusive", r.inconclusive},
          {"mode", r.exhaustive ? "exhaustive" : "shots"},
          {"variables", cn.variables()},
          {"n", r.n},
          {"marked", r.marked},
          {"gi", r.gi},
          {"p_sat", r.p_sat},
          {"cexs", cexs},
          {"warnings", r.warnings}};
}

inline nlohmann::json to_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"name", r.name},
                     {"ref_style", to_string(r.style)},
                     {"A", r.aux},
                     {"cex", r.cex_count},
                     {"resources", to_json(r.res)}};
    j["p_sat"] = r.p_sat ? nlohmann::json(*r.p_sat) : nlohmann::json(nullptr);
    if (r.p_sat) j["p_sat_mode"] = r.exhaustive ? "exhaustive" : "shots";
    if (r.improvement) {
      j["improvement"] = {{"q", r.improvement->q},
                          {"cx", r.improvement->cx},
                          {"u", r.improvement->u},
                          {"depth", r.improvement->depth}};
    }
    arr.push_back(std::move(j));
  }
  return {{"schema", json_schema}, {"rows", arr}};
}

}  // namespace qsat
