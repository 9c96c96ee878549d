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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qsat/oracle.hpp"
#include "qsat/qcircuit.hpp"
#include "qsat/simulator.hpp"
#include "support/test_support.hpp"

namespace qsat {
namespace {

using testing::corpus_miter;

// Basis index of |x, a, e, y> with variable bits taken from `vars`
// (first variable on qubit 0).
std::uint64_t basis(const std::vector<bool>& vars, bool y, const MiterLayout& lay) {
  std::uint64_t idx = 0;
  for (std::size_t v = 0; v < vars.size(); ++v) idx |= std::uint64_t{vars[v]} << v;
  if (y) idx |= std::uint64_t{1} << lay.answer();
  return idx;
}

std::uint64_t single_nonzero(const Statevector& sv) {
  std::uint64_t found = sv.size();
  for (std::uint64_t i = 0; i < sv.size(); ++i) {
    if (std::abs(sv[i]) > 1e-9) {
      EXPECT_EQ(found, sv.size()) << "more than one basis state";
      found = i;
    }
  }
  return found;
}

TEST(Layout, QubitFormula) {
  EXPECT_EQ((MiterLayout{3, 4}.num_qubits()), 12u);
  auto lay = MiterLayout{3, 5};
  EXPECT_EQ(lay.num_qubits(), 14u);
  EXPECT_EQ(lay.aux(0), 3u);
  EXPECT_EQ(lay.ancilla(0), 8u);
  EXPECT_EQ(lay.answer(), 13u);
  EXPECT_EQ(lay.search_qubits().size(), 8u);
  EXPECT_EQ(lay.ancilla_qubits(), (std::vector<Qubit>{8, 9, 10, 11, 12}));
}

TEST(Layout, ThreeInputNandAgainstPair) {
  auto flat = parse_netlist("inputs x1 x2 x3\nn1 = AND(x1,x2)\nn2 = NAND(n1,x3)\noutputs n2\n");
  auto single = parse_netlist("inputs x1 x2 x3\nn1 = NAND(x1,x2,x3)\noutputs n1\n");
  EXPECT_EQ(build_vf(build_miter(single, flat)).num_qubits(), 12u);
}

TEST(Layout, CorpusQubitCounts) {
  for (const auto& row : testing::reported()) {
    EXPECT_EQ(build_vf(corpus_miter(row.name, RefStyle::flat)).num_qubits(), row.q_flat) << row.name;
    EXPECT_EQ(build_vf(corpus_miter(row.name, RefStyle::structured)).num_qubits(),
              row.q_structured)
        << row.name;
  }
}

TEST(Layout, EmptyNetwork) {
  auto vf = build_vf(ClauseNetwork({"x1", "x2", "x3"}, {}));
  EXPECT_EQ(vf.num_qubits(), 4u);
  for (const auto& g : vf.gates()) {
    EXPECT_NE(g.target, 3u);
    for (const auto& c : g.controls) EXPECT_NE(c.qubit, 3u);
  }
}

TEST(QCircuit, GateValidation) {
  QCircuit qc(3);
  EXPECT_THROW(qc.add(QGate::x(3)), InvalidArgument);
  EXPECT_THROW(qc.add(QGate::cx(1, 1)), InvalidArgument);
  EXPECT_THROW(qc.add(QGate::mcx({{0, true}}, 2)), InvalidArgument);
  EXPECT_THROW(qc.add(QGate::mcx({{0, true}, {0, false}}, 2)), InvalidArgument);
  EXPECT_THROW(qc.add(QGate::mcx({{0, true}, {5, false}}, 2)), InvalidArgument);
  EXPECT_THROW(qc.add({QGateKind::H, {{0, true}}, 1}), InvalidArgument);
  EXPECT_THROW(qc.mark_clean({4}), InvalidArgument);
  EXPECT_THROW(QCircuit(2).append(QCircuit(3)), InvalidArgument);
  EXPECT_EQ(QGate::controlled_x({}, 0).kind, QGateKind::X);
  EXPECT_EQ(QGate::controlled_x({{1, true}}, 0).kind, QGateKind::CX);
  EXPECT_EQ(QGate::controlled_x({{1, true}, {2, true}}, 0).kind, QGateKind::MCX);
}

TEST(QCircuit, DepthAndCounts) {
  QCircuit qc(4);
  qc.add(QGate::h(0)).add(QGate::h(1)).add(QGate::cx(0, 1)).add(QGate::x(3)).add(QGate::cx(2, 3));
  EXPECT_EQ(qc.depth(), 2u);
  EXPECT_EQ(qc.count(QGateKind::H), 2u);
  EXPECT_EQ(qc.count(QGateKind::CX), 2u);
  qc.add(QGate::mcx({{0, true}, {3, true}}, 2));
  EXPECT_EQ(qc.depth(), 3u);
  EXPECT_EQ(QCircuit(5).depth(), 0u);
}

TEST(QCircuit, AppendOffsetsCleanMarks) {
  QCircuit a(2), b(2);
  a.add(QGate::x(0)).add(QGate::x(1));
  b.add(QGate::h(0)).mark_clean({1}).add(QGate::h(1));
  a.append(b);
  ASSERT_EQ(a.clean_marks().size(), 1u);
  EXPECT_EQ(a.clean_marks()[0].position, 3u);
  EXPECT_EQ(a.gates().size(), 4u);
}

TEST(QCircuit, InverseUndoesCircuit) {
  std::mt19937_64 rng(11);
  QCircuit qc(4);
  for (int i = 0; i < 40; ++i) {
    const Qubit t = rng() % 4;
    switch (rng() % 4) {
      case 0: qc.add(QGate::h(t)); break;
      case 1: qc.add(QGate::p(t, std::uniform_real_distribution<double>(-3, 3)(rng))); break;
      case 2: qc.add(QGate::cx((t + 1) % 4, t, rng() % 2)); break;
      default: qc.add(QGate::mcx({{(t + 1) % 4, true}, {(t + 2) % 4, false}}, t)); break;
    }
  }
  auto both = qc;
  both.append(qc.inverse());
  EXPECT_LT(testing::phase_distance(testing::identity(16), testing::reference_unitary(both)), 1e-9);
}

TEST(Vf, InferencesOnConsistentInputs) {
  auto cn = corpus_miter("AND", RefStyle::flat);
  auto vf = build_vf(cn);
  auto lay = layout_of(cn);
  const auto cexs = enumerate_cex(cn).cex_list;
  for (std::uint64_t x = 0; x < 8; ++x) {
    auto vars = cn.propagate(input_bits_of(x, 3));
    auto out = single_nonzero(run(vf, basis(vars, false, lay)));
    for (std::size_t j = 0; j < cn.num_aux(); ++j) EXPECT_TRUE((out >> lay.ancilla(j)) & 1u);
    const bool is_cex = std::find(cexs.begin(), cexs.end(), CexRecord{vars}) != cexs.end();
    EXPECT_EQ(((out >> lay.answer()) & 1u) != 0, is_cex) << x;
  }
}

TEST(Vf, InconsistentAssignmentsNeverFlipY) {
  auto cn = corpus_miter("OR", RefStyle::structured);
  auto vf = build_vf(cn);
  auto lay = layout_of(cn);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << cn.num_vars()); ++v) {
    auto vars = input_bits_of(v, cn.num_vars());
    auto out = single_nonzero(run(vf, basis(vars, false, lay)));
    EXPECT_EQ(((out >> lay.answer()) & 1u) != 0, check_cex(cn, CexRecord{vars})) << v;
  }
}

TEST(Uf, AncillaeReturnToZero) {
  for (const auto& name : {"AND", "XNOR"}) {
    auto cn = corpus_miter(name, RefStyle::flat);
    auto uf = build_uf(cn);
    auto lay = layout_of(cn);
    std::uint64_t e_mask = 0;
    for (auto q : lay.ancilla_qubits()) e_mask |= std::uint64_t{1} << q;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << cn.num_vars()); ++v) {
      for (bool y : {false, true}) {
        auto out = single_nonzero(run(uf, basis(input_bits_of(v, cn.num_vars()), y, lay)));
        EXPECT_EQ(out & e_mask, 0u) << name << " " << v;
      }
    }
  }
}

TEST(Uf, PhasePatternMatchesOracle) {
  auto cn = corpus_miter("AND", RefStyle::flat);
  auto lay = layout_of(cn);
  QCircuit qc(lay);
  qc.add(QGate::x(lay.answer())).add(QGate::h(lay.answer()));
  qc.append(build_uf(cn));
  qc.add(QGate::h(lay.answer())).add(QGate::x(lay.answer()));
  for (std::uint64_t v = 0; v < 256; ++v) {
    auto vars = input_bits_of(v, cn.num_vars());
    const auto in = basis(vars, false, lay);
    auto sv = run(qc, in);
    const double expected = check_cex(cn, CexRecord{vars}) ? -1.0 : 1.0;
    EXPECT_NEAR(sv[in].real(), expected, 1e-12) << v;
    EXPECT_NEAR(sv.norm_squared(), 1.0, 1e-10);
  }
}

TEST(Uf, TwiceIsIdentity) {
  auto cn = corpus_miter("NOR", RefStyle::structured);
  auto lay = layout_of(cn);
  auto twice = build_uf(cn);
  twice.append(build_uf(cn));
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << cn.num_vars()); ++v) {
    for (bool y : {false, true}) {
      const auto in = basis(input_bits_of(v, cn.num_vars()), y, lay);
      auto sv = run(twice, in);
      EXPECT_NEAR(std::abs(sv[in] - 1.0), 0.0, 1e-12);
    }
  }
}

TEST(Uf, ExclusionUsesOnlySearchQubits) {
  auto cn = corpus_miter("AND", RefStyle::flat);
  auto cex = enumerate_cex(cn).cex_list.front();
  auto lay = layout_of(cn);
  auto vf = build_vf(exclude_cex(cn, cex));
  const auto& last = vf.gates().back();
  EXPECT_EQ(last.target, lay.answer());
  ASSERT_EQ(last.controls.size(), cn.num_vars());
  for (std::size_t v = 0; v < cn.num_vars(); ++v) {
    EXPECT_EQ(last.controls[v].qubit, v);
    EXPECT_EQ(last.controls[v].positive, cex.bits[v]);
  }
}

// Reference for the diffuser: 2|s><s| - I on n qubits.
testing::Matrix reflection(std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  testing::Matrix m(dim, std::vector<std::complex<double>>(dim, 2.0 / static_cast<double>(dim)));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] -= 1.0;
  return m;
}

TEST(Diffuser, SingleQubit) {
  EXPECT_LT(testing::phase_distance(reflection(1), testing::reference_unitary(build_diffuser(1))),
            1e-12);
  EXPECT_THROW(build_diffuser(0), InvalidArgument);
}

TEST(Diffuser, UniformStateIsFixed) {
  QCircuit qc(2);
  qc.add(QGate::h(0)).add(QGate::h(1));
  qc.append(build_diffuser(2));
  auto sv = run(qc);
  const std::complex<double> phase = sv[0] / 0.5;
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(sv[i] - 0.5 * phase), 0.0, 1e-12);
}

TEST(Diffuser, EightQubitsColumnByColumn) {
  auto d = build_diffuser(8);
  EXPECT_LT(testing::phase_distance(reflection(8), testing::simulated_unitary(d)), 1e-9);
}

TEST(Diffuser, SmallSizesAgainstDenseReference) {
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_LT(testing::phase_distance(reflection(n), testing::reference_unitary(build_diffuser(n))),
              1e-12)
        << n;
  }
}

TEST(Stages, Shape) {
  auto cn = corpus_miter("XOR", RefStyle::structured);
  auto lay = layout_of(cn);
  auto s = build_qsat_stages(cn, cn);
  EXPECT_EQ(s.prepare.gates().size(), 2 + lay.num_search());
  EXPECT_EQ(s.iteration.gates().size(), build_uf(cn).gates().size() + build_diffuser(7).gates().size());
  auto full = build_qsat_network(cn, cn, 2);
  EXPECT_EQ(full.gates().size(), s.prepare.gates().size() + 2 * s.iteration.gates().size() +
                                     s.finish.gates().size());
  EXPECT_EQ(full.layout(), std::optional<MiterLayout>(lay));
  EXPECT_THROW(build_qsat_stages(cn, corpus_miter("XOR", RefStyle::flat)), InvalidArgument);
}

}  // namespace
}  // namespace qsat
