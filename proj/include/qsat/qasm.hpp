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

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "qsat/error.hpp"
#include "qsat/qcircuit.hpp"

namespace qsat {

/// OpenQASM 2.0 text for a circuit already lowered to X/H/P/CX.  Miter
/// circuits get named registers x, a, e, y; others a single register q.
inline std::string emit_qasm(const QCircuit& qc) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  auto name = [&](Qubit q) {
    std::ostringstream s;
    if (const auto& lay = qc.layout()) {
      if (q < lay->num_inputs) {
        s << "x[" << q << ']';
      } else if (q < lay->num_search()) {
        s << "a[" << q - lay->num_inputs << ']';
      } else if (q < lay->answer()) {
        s << "e[" << q - lay->num_search() << ']';
      } else {
        s << "y[0]";
      }
    } else {
      s << "q[" << q << ']';
    }
    return s.str();
  };
  if (const auto& lay = qc.layout()) {
    if (lay->num_inputs) out << "qreg x[" << lay->num_inputs << "];\n";
    if (lay->num_aux) out << "qreg a[" << lay->num_aux << "];\nqreg e[" << lay->num_aux << "];\n";
    out << "qreg y[1];\n";
  } else {
    out << "qreg q[" << qc.num_qubits() << "];\n";
  }
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& g : qc.gates()) {
    switch (g.kind) {
      case QGateKind::X: out << "x " << name(g.target) << ";\n"; break;
      case QGateKind::H: out << "h " << name(g.target) << ";\n"; break;
      case QGateKind::P: out << "p(" << g.angle << ") " << name(g.target) << ";\n"; break;
      case QGateKind::CX:
        if (!g.controls[0].positive) throw InvalidArgument("negative control left in circuit");
        out << "cx " << name(g.controls[0].qubit) << ',' << name(g.target) << ";\n";
        break;
      case QGateKind::MCX:
        throw InvalidArgument("transpile before emitting OpenQASM");
    }
  }
  return out.str();
}

}  // namespace qsat
