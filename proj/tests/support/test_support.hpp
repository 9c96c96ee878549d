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

// Test-only helpers: corpus access and reference oracles that do not share
// code paths with the library's simulator kernels.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qsat/bench.hpp"
#include "qsat/clause_gen.hpp"
#include "qsat/netlist.hpp"
#include "qsat/qcircuit.hpp"
#include "qsat/simulator.hpp"

namespace qsat::testing {

inline std::string corpus_dir() { return QSAT_CORPUS_DIR; }

inline ClauseNetwork corpus_miter(const std::string& name, RefStyle style) {
  auto p = load_benchmark(corpus_dir(), name, style);
  return build_miter(p.impl, p.ref);
}

inline Netlist corpus_netlist(const std::string& file) {
  return load_netlist(corpus_dir() + "/" + file);
}

/// Bits of `value` as a vector, first element most significant.
inline std::vector<bool> bits_msb_first(std::uint64_t value, std::size_t width) {
  std::vector<bool> b(width);
  for (std::size_t i = 0; i < width; ++i) b[i] = (value >> (width - 1 - i)) & 1u;
  return b;
}

using Matrix = std::vector<std::vector<std::complex<double>>>;  // [row][col]

inline Matrix identity(std::size_t dim) {
  Matrix m(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

/// Full matrix of one gate, written from the gate's textbook definition.
inline Matrix gate_matrix(const QGate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix m(dim, std::vector<std::complex<double>>(dim, 0.0));
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t col = 0; col < dim; ++col) {
    const bool t = (col >> g.target) & 1u;
    bool fire = true;
    for (const auto& c : g.controls) fire &= (((col >> c.qubit) & 1u) != 0) == c.positive;
    const std::size_t flipped = col ^ (std::size_t{1} << g.target);
    switch (g.kind) {
      case QGateKind::X: m[flipped][col] = 1.0; break;
      case QGateKind::H:
        m[col & ~(std::size_t{1} << g.target)][col] += r;
        m[col | (std::size_t{1} << g.target)][col] += t ? -r : r;
        break;
      case QGateKind::P: m[col][col] = t ? std::polar(1.0, g.angle) : 1.0; break;
      case QGateKind::CX:
      case QGateKind::MCX:
        if (fire) {
          m[flipped][col] = 1.0;
        } else {
          m[col][col] = 1.0;
        }
        break;
    }
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const auto dim = a.size();
  Matrix c(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[i][k] == 0.0) continue;
      for (std::size_t j = 0; j < dim; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

/// Product of gate matrices; only for a handful of qubits.
inline Matrix reference_unitary(const QCircuit& qc) {
  auto u = identity(std::size_t{1} << qc.num_qubits());
  for (const auto& g : qc.gates()) u = multiply(gate_matrix(g, qc.num_qubits()), u);
  return u;
}

/// Unitary assembled column by column from simulator runs.
inline Matrix simulated_unitary(const QCircuit& qc) {
  const std::size_t dim = std::size_t{1} << qc.num_qubits();
  Matrix m(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t col = 0; col < dim; ++col) {
    auto sv = run(qc, col);
    for (std::size_t row = 0; row < dim; ++row) m[row][col] = sv[row];
  }
  return m;
}

/// Largest entry-wise deviation of `b` from `a` after removing one global phase.
inline double phase_distance(const Matrix& a, const Matrix& b) {
  std::complex<double> phase = 0.0;
  for (std::size_t i = 0; i < a.size() && phase == 0.0; ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (std::abs(a[i][j]) > 1e-6) {
        phase = b[i][j] / a[i][j];
        break;
      }
    }
  }
  if (std::abs(std::abs(phase) - 1.0) > 1e-9) return 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      worst = std::max(worst, std::abs(a[i][j] * phase - b[i][j]));
    }
  }
  return worst;
}

/// Largest deviation between the columns of two circuits' unitaries, after
/// removing one global phase, over the basis inputs accepted by `keep`.
template <class Keep>
double column_distance(const QCircuit& a, const QCircuit& b, Keep&& keep) {
  const std::size_t dim = std::size_t{1} << a.num_qubits();
  std::complex<double> phase = 0.0;
  double worst = 0.0;
  for (std::size_t col = 0; col < dim; ++col) {
    if (!keep(col)) continue;
    auto sa = run(a, col);
    auto sb = run(b, col);
    if (phase == 0.0) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < dim; ++i) {
        if (std::abs(sa[i]) > std::abs(sa[best])) best = i;
      }
      phase = sb[best] / sa[best];
      if (std::abs(std::abs(phase) - 1.0) > 1e-9) return 1.0;
    }
    for (std::size_t i = 0; i < dim; ++i) worst = std::max(worst, std::abs(sa[i] * phase - sb[i]));
  }
  return worst;
}

inline double column_distance(const QCircuit& a, const QCircuit& b) {
  return column_distance(a, b, [](std::size_t) { return true; });
}

/// Mask of the ancilla register of a miter-shaped circuit.
inline std::uint64_t ancilla_mask(const MiterLayout& lay) {
  std::uint64_t m = 0;
  for (auto q : lay.ancilla_qubits()) m |= std::uint64_t{1} << q;
  return m;
}

struct TableEntry {
  const char* name;
  std::uint64_t cex;
  std::size_t q_flat, aux_flat, gi_flat;
  std::size_t q_structured, aux_structured, gi_structured;
  double p_flat, p_structured;  // plotted SAT probabilities (0 when absent)
};

// Reported benchmark values: CEX counts, qubits, auxiliaries, iterations and
// SAT probabilities per reference style.
inline const std::vector<TableEntry>& reported() {
  static const std::vector<TableEntry> t{
      {"AND", 2, 14, 5, 6, 12, 4, 4, 0.830, 0.801},
      {"NAND", 2, 14, 5, 6, 12, 4, 4, 0.858, 0.829},
      {"OR", 1, 14, 5, 8, 12, 4, 6, 0.761, 0.830},
      {"NOR", 3, 14, 5, 5, 12, 4, 3, 0.859, 0.769},
      {"XOR", 8, 14, 5, 3, 12, 4, 2, 0.879, 0.914},
      {"XNOR", 6, 14, 5, 3, 12, 4, 2, 0.758, 0.799},
      {"MUX", 6, 22, 9, 13, 16, 6, 5, 0.754, 0.872},
      {"CARRY", 4, 22, 9, 16, 16, 6, 6, 0.741, 0.843},
      {"FA", 8, 30, 13, 45, 24, 10, 16, 0.0, 0.0},
  };
  return t;
}

}  // namespace qsat::testing
