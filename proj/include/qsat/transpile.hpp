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
  \file transpile.hpp
  \brief Lowering to the {X, H, P, CX} basis and gate/depth accounting.

  Multi-controlled X gates are decomposed into Toffoli ladders that borrow
  c-2 helper qubits for c controls.  A clean ladder needs helpers known to
  be |0> (see CleanMark) and costs 2c-3 Toffolis; a dirty ladder borrows
  arbitrary qubits and restores them, costing 4c-8 Toffolis.  With fewer
  than c-2 but at least one free qubit the gate is first split in two
  around a single borrowed qubit.  Each Toffoli becomes 6 CX, 2 H and 7 P.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "qsat/error.hpp"
#include "qsat/qcircuit.hpp"

namespace qsat {

enum class ChainMode {
  v_chain,        ///< clean helpers only; error when not enough are known |0>
  v_chain_dirty,  ///< always borrow, never assume |0>
  automatic,      ///< per gate: clean when available, else dirty
};

inline std::string_view to_string(ChainMode m) {
  switch (m) {
    case ChainMode::v_chain: return "v-chain";
    case ChainMode::v_chain_dirty: return "v-chain-dirty";
    case ChainMode::automatic: return "auto";
  }
  return "?";
}

inline ChainMode chain_mode_from_string(std::string_view s) {
  if (s == "v-chain") return ChainMode::v_chain;
  if (s == "v-chain-dirty") return ChainMode::v_chain_dirty;
  if (s == "auto") return ChainMode::automatic;
  throw InvalidArgument("unknown mode '" + std::string(s) + "'");
}

struct ResourceReport {
  std::size_t q = 0;      ///< qubits
  std::size_t cx = 0;     ///< two-qubit gates
  std::size_t u = 0;      ///< single-qubit gates
  std::size_t depth = 0;  ///< longest gate chain
  std::size_t gi = 0;     ///< Grover iterations, when applicable

  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

/// Counts of a circuit as it stands (MCX gates count as two-qubit gates).
inline ResourceReport measure(const QCircuit& qc) {
  ResourceReport r;
  r.q = qc.num_qubits();
  for (const auto& g : qc.gates()) {
    if (g.is_single_qubit()) {
      ++r.u;
    } else {
      ++r.cx;
    }
  }
  r.depth = qc.depth();
  return r;
}

struct TranspileResult {
  QCircuit circuit;
  ResourceReport report;
};

namespace detail {

class Lowering {
 public:
  Lowering(const QCircuit& src, ChainMode mode)
      : mode_(mode),
        out_(src.layout() ? QCircuit(*src.layout()) : QCircuit(src.num_qubits())),
        clean_(src.num_qubits(), false) {}

  QCircuit& out() { return out_; }
  void set_clean(Qubit q, bool v) { clean_[q] = v; }

  void lower(const QGate& g) {
    switch (g.kind) {
      case QGateKind::X:
      case QGateKind::H:
      case QGateKind::P:
        out_.add(g);
        break;
      case QGateKind::CX:
      case QGateKind::MCX: {
        std::vector<Qubit> ctrls;
        for (const auto& c : g.controls) {
          if (!c.positive) out_.add(QGate::x(c.qubit));
          ctrls.push_back(c.qubit);
        }
        mcx(ctrls, g.target);
        for (const auto& c : g.controls) {
          if (!c.positive) out_.add(QGate::x(c.qubit));
        }
        break;
      }
    }
  }

 private:
  void toffoli(Qubit a, Qubit b, Qubit t) {
    constexpr double q = std::numbers::pi / 4;
    out_.add(QGate::h(t));
    out_.add(QGate::cx(b, t));
    out_.add(QGate::p(t, -q));
    out_.add(QGate::cx(a, t));
    out_.add(QGate::p(t, q));
    out_.add(QGate::cx(b, t));
    out_.add(QGate::p(t, -q));
    out_.add(QGate::cx(a, t));
    out_.add(QGate::p(b, q));
    out_.add(QGate::p(t, q));
    out_.add(QGate::h(t));
    out_.add(QGate::cx(a, b));
    out_.add(QGate::p(a, q));
    out_.add(QGate::p(b, -q));
    out_.add(QGate::cx(a, b));
  }

  std::vector<Qubit> free_qubits(const std::vector<Qubit>& ctrls, Qubit t, bool clean_only) const {
    std::vector<Qubit> busy(ctrls);
    busy.push_back(t);
    std::vector<Qubit> free;
    for (Qubit q = 0; q < clean_.size(); ++q) {
      if (std::find(busy.begin(), busy.end(), q) != busy.end()) continue;
      if (clean_only && !clean_[q]) continue;
      free.push_back(q);
    }
    return free;
  }

  void clean_ladder(const std::vector<Qubit>& c, const std::vector<Qubit>& h, Qubit t) {
    const auto n = c.size();
    toffoli(c[0], c[1], h[0]);
    for (std::size_t i = 2; i + 1 < n; ++i) toffoli(c[i], h[i - 2], h[i - 1]);
    toffoli(c[n - 1], h[n - 3], t);
    for (std::size_t i = n - 2; i >= 2; --i) toffoli(c[i], h[i - 2], h[i - 1]);
    toffoli(c[0], c[1], h[0]);
  }

  void dirty_ladder(const std::vector<Qubit>& c, const std::vector<Qubit>& h, Qubit t) {
    const auto n = c.size();
    auto down_base_up = [&] {
      for (std::size_t i = n - 2; i >= 2; --i) toffoli(c[i], h[i - 2], h[i - 1]);
      toffoli(c[0], c[1], h[0]);
      for (std::size_t i = 2; i + 1 < n; ++i) toffoli(c[i], h[i - 2], h[i - 1]);
    };
    toffoli(c[n - 1], h[n - 3], t);
    down_base_up();
    toffoli(c[n - 1], h[n - 3], t);
    down_base_up();
  }

  void mcx(const std::vector<Qubit>& c, Qubit t) {
    if (c.empty()) {
      out_.add(QGate::x(t));
      return;
    }
    if (c.size() == 1) {
      out_.add(QGate::cx(c[0], t));
      return;
    }
    if (c.size() == 2) {
      toffoli(c[0], c[1], t);
      return;
    }
    const auto need = c.size() - 2;
    if (mode_ != ChainMode::v_chain_dirty) {
      auto clean = free_qubits(c, t, true);
      if (clean.size() >= need) {
        clean.resize(need);
        clean_ladder(c, clean, t);
        return;
      }
      if (mode_ == ChainMode::v_chain) {
        throw InvalidArgument("v-chain needs " + std::to_string(need) + " clean qubits for a " +
                              std::to_string(c.size()) + "-control gate, " +
                              std::to_string(clean.size()) + " available");
      }
    }
    auto any = free_qubits(c, t, false);
    if (any.size() >= need) {
      any.resize(need);
      dirty_ladder(c, any, t);
      return;
    }
    if (any.empty()) {
      throw InvalidArgument("no free qubit to decompose a " + std::to_string(c.size()) +
                            "-control gate on " + std::to_string(clean_.size()) + " qubits");
    }
    // t ^= (A & B) via one borrowed qubit: [B,a -> t] [A -> a] [B,a -> t] [A -> a]
    const Qubit a = any.front();
    const auto split = (c.size() + 1) / 2;
    std::vector<Qubit> first(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<Qubit> second(c.begin() + static_cast<std::ptrdiff_t>(split), c.end());
    second.push_back(a);
    mcx(second, t);
    mcx(first, a);
    mcx(second, t);
    mcx(first, a);
  }

  ChainMode mode_;
  QCircuit out_;
  std::vector<bool> clean_;
};

}  // namespace detail

/// Lowers `qc` to X/H/P/CX.  Semantics are preserved on every input for
/// v-chain-dirty; clean ladders rely on the circuit's CleanMarks holding.
inline TranspileResult transpile(const QCircuit& qc, ChainMode mode = ChainMode::automatic) {
  detail::Lowering low(qc, mode);
  const auto& marks = qc.clean_marks();
  std::size_t next_mark = 0;
  std::vector<std::size_t> order(marks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return marks[a].position < marks[b].position; });

  for (std::size_t idx = 0; idx < qc.gates().size(); ++idx) {
    while (next_mark < order.size() && marks[order[next_mark]].position <= idx) {
      for (auto q : marks[order[next_mark]].qubits) low.set_clean(q, true);
      ++next_mark;
    }
    const auto& g = qc.gates()[idx];
    low.lower(g);
    if (g.kind != QGateKind::P) low.set_clean(g.target, false);
  }
  TranspileResult result{std::move(low.out()), {}};
  result.report = measure(result.circuit);
  return result;
}

}  // namespace qsat
