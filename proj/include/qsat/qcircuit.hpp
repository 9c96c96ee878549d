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
  \file qcircuit.hpp
  \brief Quantum circuit IR and the miter, oracle and diffuser builders.

  Miter circuits use four registers laid out contiguously:

      [0, |X|)             inputs X
      [|X|, |X|+|A|)       auxiliaries A
      [|X|+|A|, |X|+2|A|)  ancillae E, one per auxiliary
      |X|+2|A|             answer qubit y

  Basis-state index bit q holds qubit q.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsat/clause_gen.hpp"
#include "qsat/error.hpp"

namespace qsat {

using Qubit = std::size_t;

enum class QGateKind { X, H, P, CX, MCX };

struct Control {
  Qubit qubit;
  bool positive = true;

  friend bool operator==(const Control&, const Control&) = default;
};

struct QGate {
  QGateKind kind;
  std::vector<Control> controls;
  Qubit target;
  double angle = 0.0;  // P only

  static QGate x(Qubit t) { return {QGateKind::X, {}, t}; }
  static QGate h(Qubit t) { return {QGateKind::H, {}, t}; }
  static QGate p(Qubit t, double theta) { return {QGateKind::P, {}, t, theta}; }
  static QGate cx(Qubit c, Qubit t, bool positive = true) {
    return {QGateKind::CX, {{c, positive}}, t};
  }
  static QGate mcx(std::vector<Control> controls, Qubit t) {
    return {QGateKind::MCX, std::move(controls), t};
  }
  /// X, CX or MCX depending on the number of controls.
  static QGate controlled_x(std::vector<Control> controls, Qubit t) {
    if (controls.empty()) return x(t);
    if (controls.size() == 1) return {QGateKind::CX, std::move(controls), t};
    return mcx(std::move(controls), t);
  }

  bool is_single_qubit() const noexcept {
    return kind == QGateKind::X || kind == QGateKind::H || kind == QGateKind::P;
  }

  friend bool operator==(const QGate&, const QGate&) = default;
};

/// Register sizes of a miter circuit.
struct MiterLayout {
  std::size_t num_inputs = 0;
  std::size_t num_aux = 0;

  /// |X| + 2|A| + 1
  std::size_t num_qubits() const noexcept { return num_inputs + 2 * num_aux + 1; }
  std::size_t num_search() const noexcept { return num_inputs + num_aux; }
  Qubit input(std::size_t i) const noexcept { return i; }
  Qubit aux(std::size_t j) const noexcept { return num_inputs + j; }
  Qubit ancilla(std::size_t j) const noexcept { return num_inputs + num_aux + j; }
  Qubit answer() const noexcept { return num_inputs + 2 * num_aux; }
  /// Qubit holding clause-network variable `var` (X then A ordering).
  Qubit variable(std::size_t var) const noexcept { return var; }

  std::vector<Qubit> search_qubits() const {
    std::vector<Qubit> q(num_search());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = i;
    return q;
  }
  std::vector<Qubit> ancilla_qubits() const {
    std::vector<Qubit> q;
    for (std::size_t j = 0; j < num_aux; ++j) q.push_back(ancilla(j));
    return q;
  }

  friend bool operator==(const MiterLayout&, const MiterLayout&) = default;
};

/// Qubits known to be |0> right before gate `position` whenever the circuit
/// runs from its intended initial state.  Transpilation may use them as
/// clean helper qubits.
struct CleanMark {
  std::size_t position;
  std::vector<Qubit> qubits;
};

class QCircuit {
 public:
  explicit QCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}
  explicit QCircuit(MiterLayout layout) : num_qubits_(layout.num_qubits()), layout_(layout) {}

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<QGate>& gates() const noexcept { return gates_; }
  const std::optional<MiterLayout>& layout() const noexcept { return layout_; }
  const std::vector<CleanMark>& clean_marks() const noexcept { return marks_; }

  /// Validates and appends; throws InvalidArgument on a malformed gate.
  QCircuit& add(QGate g) {
    check(g);
    gates_.push_back(std::move(g));
    return *this;
  }

  /// Appends `other`, whose qubit i maps to qubit i of this circuit.
  QCircuit& append(const QCircuit& other) {
    if (other.num_qubits_ > num_qubits_) throw InvalidArgument("appended circuit is wider");
    auto offset = gates_.size();
    for (const auto& m : other.marks_) marks_.push_back({m.position + offset, m.qubits});
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
  }

  QCircuit& mark_clean(std::vector<Qubit> qubits) {
    for (auto q : qubits) {
      if (q >= num_qubits_) throw InvalidArgument("clean mark out of range");
    }
    marks_.push_back({gates_.size(), std::move(qubits)});
    return *this;
  }

  /// Adjoint: reversed order, negated phases.  Clean marks are dropped.
  QCircuit inverse() const {
    QCircuit inv(num_qubits_);
    inv.layout_ = layout_;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
      auto g = *it;
      if (g.kind == QGateKind::P) g.angle = -g.angle;
      inv.gates_.push_back(std::move(g));
    }
    return inv;
  }

  std::size_t count(QGateKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [kind](const QGate& g) { return g.kind == kind; }));
  }

  /// Longest chain of gates sharing a qubit.
  std::size_t depth() const {
    std::vector<std::size_t> level(num_qubits_, 0);
    std::size_t d = 0;
    for (const auto& g : gates_) {
      std::size_t l = level[g.target];
      for (const auto& c : g.controls) l = std::max(l, level[c.qubit]);
      ++l;
      level[g.target] = l;
      for (const auto& c : g.controls) level[c.qubit] = l;
      d = std::max(d, l);
    }
    return d;
  }

 private:
  void check(const QGate& g) const {
    if (g.target >= num_qubits_) throw InvalidArgument("gate target out of range");
    switch (g.kind) {
      case QGateKind::X:
      case QGateKind::H:
      case QGateKind::P:
        if (!g.controls.empty()) throw InvalidArgument("single-qubit gate with controls");
        break;
      case QGateKind::CX:
        if (g.controls.size() != 1) throw InvalidArgument("CX needs exactly one control");
        break;
      case QGateKind::MCX:
        if (g.controls.size() < 2) throw InvalidArgument("MCX needs at least two controls");
        break;
    }
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      const auto q = g.controls[i].qubit;
      if (q >= num_qubits_) throw InvalidArgument("control out of range");
      if (q == g.target) throw InvalidArgument("control coincides with target");
      for (std::size_t k = i + 1; k < g.controls.size(); ++k) {
        if (g.controls[k].qubit == q) throw InvalidArgument("repeated control qubit");
      }
    }
  }

  std::size_t num_qubits_;
  std::optional<MiterLayout> layout_;
  std::vector<QGate> gates_;
  std::vector<CleanMark> marks_;
};

inline MiterLayout layout_of(const ClauseNetwork& cn) { return {cn.num_inputs(), cn.num_aux()}; }

namespace detail {

// Leaves e_j = [a_j agrees with its clause] for every auxiliary j.
inline void add_inferences(QCircuit& qc, const ClauseNetwork& cn, const MiterLayout& lay) {
  for (std::size_t j = 0; j < cn.num_aux(); ++j) {
    const auto& clause = cn.compiled(j);
    const auto target = lay.ancilla(j);
    if (clause.constant) qc.add(QGate::x(target));
    for (const auto& term : clause.terms) {
      std::vector<Control> ctrls;
      for (auto [var, pos] : term) ctrls.push_back({lay.variable(var), pos});
      qc.add(QGate::controlled_x(std::move(ctrls), target));
    }
  }
}

// y ^= F-hat(X, A) on consistent states.
inline void add_answer_flips(QCircuit& qc, const ClauseNetwork& cn, const MiterLayout& lay) {
  if (auto top = cn.top_index()) {
    std::vector<Control> ctrls{{lay.variable(*top), true}};
    for (std::size_t j = 0; j < cn.num_aux(); ++j) ctrls.push_back({lay.ancilla(j), true});
    qc.add(QGate::controlled_x(std::move(ctrls), lay.answer()));
  }
  // One full-width term per excluded assignment, controls over X and A.
  for (const auto& ex : cn.exclusions()) {
    std::vector<Control> ctrls;
    for (std::size_t v = 0; v < ex.bits.size(); ++v) ctrls.push_back({lay.variable(v), ex.bits[v]});
    qc.add(QGate::controlled_x(std::move(ctrls), lay.answer()));
  }
}

}  // namespace detail

/// V_F: computes the clause checks into E and flips y by F-hat.
/// Ancillae keep their inference values afterwards.
inline QCircuit build_vf(const ClauseNetwork& cn) {
  const auto lay = layout_of(cn);
  QCircuit qc(lay);
  qc.mark_clean(lay.ancilla_qubits());
  detail::add_inferences(qc, cn, lay);
  detail::add_answer_flips(qc, cn, lay);
  return qc;
}

/// U_F: V_F followed by the inference gates in reverse, returning E to |0>.
/// With y in |-> this applies (-1)^F-hat(X,A) to consistent states.
inline QCircuit build_uf(const ClauseNetwork& cn) {
  const auto lay = layout_of(cn);
  QCircuit forward(lay);
  detail::add_inferences(forward, cn, lay);

  QCircuit qc(lay);
  qc.mark_clean(lay.ancilla_qubits());
  qc.append(forward);
  detail::add_answer_flips(qc, cn, lay);
  qc.append(forward.inverse());
  return qc;
}

/// Inversion about the mean on qubits [0, n): H X (multi-controlled Z) X H.
/// Equals -(2|s><s| - I).
inline QCircuit build_diffuser(std::size_t n) {
  if (n == 0) throw InvalidArgument("diffuser needs at least one qubit");
  QCircuit qc(n);
  for (Qubit q = 0; q < n; ++q) qc.add(QGate::h(q));
  for (Qubit q = 0; q < n; ++q) qc.add(QGate::x(q));
  const Qubit t = n - 1;
  std::vector<Control> ctrls;
  for (Qubit q = 0; q < t; ++q) ctrls.push_back({q, true});
  qc.add(QGate::h(t));
  qc.add(QGate::controlled_x(std::move(ctrls), t));
  qc.add(QGate::h(t));
  for (Qubit q = 0; q < n; ++q) qc.add(QGate::x(q));
  for (Qubit q = 0; q < n; ++q) qc.add(QGate::h(q));
  return qc;
}

/// The qSAT network split into its three stages:
///   prepare:   y <- |->, H on X and A
///   iteration: U_F-hat then the diffuser on X and A (repeat GI times)
///   finish:    y <- |0>, then the unaltered V_F
struct QsatStages {
  QCircuit prepare;
  QCircuit iteration;
  QCircuit finish;
};

/// `oracle` carries the exclusions used for phase marking; `verify` is the
/// miter evaluated at the end.  Both must share the same variables.
inline QsatStages build_qsat_stages(const ClauseNetwork& oracle, const ClauseNetwork& verify) {
  const auto lay = layout_of(oracle);
  if (layout_of(verify) != lay || oracle.variables() != verify.variables()) {
    throw InvalidArgument("oracle and verification networks differ in variables");
  }
  QsatStages s{QCircuit(lay), QCircuit(lay), QCircuit(lay)};

  std::vector<Qubit> all(lay.num_qubits());
  for (Qubit q = 0; q < all.size(); ++q) all[q] = q;
  s.prepare.mark_clean(all);
  s.prepare.add(QGate::x(lay.answer())).add(QGate::h(lay.answer()));
  for (auto q : lay.search_qubits()) s.prepare.add(QGate::h(q));

  s.iteration.append(build_uf(oracle));
  s.iteration.mark_clean(lay.ancilla_qubits());
  s.iteration.append(build_diffuser(lay.num_search()));

  s.finish.add(QGate::h(lay.answer())).add(QGate::x(lay.answer()));
  s.finish.append(build_vf(verify));
  return s;
}

/// prepare + iterations x iteration + finish as one circuit.
inline QCircuit build_qsat_network(const ClauseNetwork& oracle, const ClauseNetwork& verify,
                                   std::size_t iterations) {
  auto s = build_qsat_stages(oracle, verify);
  QCircuit qc(layout_of(oracle));
  qc.append(s.prepare);
  for (std::size_t i = 0; i < iterations; ++i) qc.append(s.iteration);
  qc.append(s.finish);
  return qc;
}

}  // namespace qsat
