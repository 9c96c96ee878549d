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
  \file oracle.hpp
  \brief Classical brute-force ground truth for clause-network miters.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qsat/clause_gen.hpp"
#include "qsat/error.hpp"

namespace qsat {

inline constexpr std::size_t oracle_max_inputs = 24;

struct OracleReport {
  std::vector<CexRecord> cex_list;  // ascending by X read as an unsigned integer
  std::uint64_t cex_count = 0;
  bool equivalent = true;
};

/// Input bits for `value`, first input as the most significant bit.
inline std::vector<bool> input_bits_of(std::uint64_t value, std::size_t width) {
  std::vector<bool> bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[i] = (value >> (width - 1 - i)) & 1u;
  return bits;
}

/// Enumerates the 2^|X| input assignments, derives the unique consistent A
/// for each, and records (X, A) whenever the augmented miter evaluates to 1.
inline OracleReport enumerate_cex(const ClauseNetwork& cn) {
  if (cn.num_inputs() > oracle_max_inputs) {
    throw CapacityError("enumeration bound exceeded: " + std::to_string(cn.num_inputs()) +
                          " inputs (max " + std::to_string(oracle_max_inputs) + ")");
  }
  OracleReport report;
  const std::uint64_t total = std::uint64_t{1} << cn.num_inputs();
  for (std::uint64_t x = 0; x < total; ++x) {
    auto full = cn.propagate(input_bits_of(x, cn.num_inputs()));
    if (cn.miter_value(full)) report.cex_list.push_back({std::move(full)});
  }
  report.cex_count = report.cex_list.size();
  report.equivalent = report.cex_count == 0;
  return report;
}

/// True iff `cex` is consistent with every definition and F-hat is 1 there.
inline bool check_cex(const ClauseNetwork& cn, const CexRecord& cex) {
  if (cex.bits.size() != cn.num_vars()) {
    throw InvalidArgument("record covers " + std::to_string(cex.bits.size()) +
                          " variables, network has " + std::to_string(cn.num_vars()));
  }
  return cn.consistent(cex.bits) && cn.miter_value(cex.bits);
}

}  // namespace qsat
