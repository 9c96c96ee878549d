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

#pragma once

#include <cstdint>

#include "qsat/clause_gen.hpp"
#include "qsat/grover.hpp"
#include "qsat/netlist.hpp"
#include "qsat/qcircuit.hpp"
#include "qsat/transpile.hpp"

namespace qsat {

/// Transpiled cost of the complete qSAT network for a miter with `m` CEXs:
/// preparation, GI iterations of U_F and the diffuser, and the final V_F.
inline ResourceReport network_resources(const ClauseNetwork& cn, std::uint64_t m,
                                        ChainMode mode = ChainMode::automatic) {
  const auto gi = grover_iterations(cn.num_vars(), m);
  auto report = transpile(build_qsat_network(cn, cn.without_exclusions(), gi), mode).report;
  report.gi = gi;
  return report;
}

inline ResourceReport resources(const Netlist& impl, const Netlist& ref, std::uint64_t m,
                                ChainMode mode = ChainMode::automatic) {
  return network_resources(build_miter(impl, ref), m, mode);
}

}  // namespace qsat
