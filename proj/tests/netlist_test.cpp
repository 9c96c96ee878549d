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

#include "qsat/netlist.hpp"
#include "support/test_support.hpp"

namespace qsat {
namespace {

using testing::bits_msb_first;
using testing::corpus_netlist;

std::map<std::string, bool> assign(const Netlist& net, std::uint64_t value) {
  std::map<std::string, bool> a;
  auto bits = bits_msb_first(value, net.inputs().size());
  for (std::size_t i = 0; i < bits.size(); ++i) a[net.inputs()[i]] = bits[i];
  return a;
}

TEST(Netlist, ParsesThreeInputAnd) {
  auto net = parse_netlist("inputs x1 x2 x3\na1 = AND(x1,x2)\na2 = AND(a1,x3)\noutputs a2\n");
  ASSERT_EQ(net.inputs().size(), 3u);
  ASSERT_EQ(net.nodes().size(), 2u);
  for (std::uint64_t v = 0; v < 8; ++v) {
    EXPECT_EQ(evaluate(net, assign(net, v)).at("a2"), v == 7) << v;
  }
}

TEST(Netlist, WireOnlyCircuit) {
  auto net = parse_netlist("inputs x1\noutputs x1\n");
  EXPECT_TRUE(net.nodes().empty());
  EXPECT_TRUE(evaluate(net, {{"x1", true}}).at("x1"));
  EXPECT_FALSE(evaluate(net, {{"x1", false}}).at("x1"));
}

TEST(Netlist, CommentsAndBlankLines) {
  auto net = parse_netlist("# header\n\ninputs a b  # trailing\nc = xor(a, b)\n\noutputs c\n");
  EXPECT_EQ(net.nodes()[0].kind.tag(), GateTag::XOR);
  EXPECT_EQ(net.nodes()[0].fanins, (std::vector<std::string>{"a", "b"}));
}

TEST(Netlist, ArityMismatchIsRejected) {
  EXPECT_THROW(parse_netlist("inputs x1 x2\na1 = AND(x1)\noutputs a1\n"), ParseError);
  EXPECT_THROW(parse_netlist("inputs x1 x2\na1 = NOT(x1,x2)\noutputs a1\n"), ParseError);
  EXPECT_THROW(parse_netlist("inputs x1 x2\na1 = MAJ(x1,x2)\noutputs a1\n"), ParseError);
  EXPECT_THROW(GateKind(GateTag::ITE, 4), InvalidArgument);
}

TEST(Netlist, ErrorsCarryLineNumbers) {
  try {
    parse_netlist("inputs a b\n\nc = FOO(a,b)\noutputs c\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Netlist, StructuralErrors) {
  // undefined fan-in
  EXPECT_THROW(parse_netlist("inputs a b\nc = AND(a,z)\noutputs c\n"), ParseError);
  // duplicate name
  EXPECT_THROW(parse_netlist("inputs a b\na = AND(a,b)\noutputs a\n"), ParseError);
  EXPECT_THROW(parse_netlist("inputs a a\noutputs a\n"), ParseError);
  // cycle
  EXPECT_THROW(parse_netlist("inputs a\nc = AND(a,d)\nd = AND(a,c)\noutputs d\n"), ParseError);
  // missing directives
  EXPECT_THROW(parse_netlist("c = AND(a,b)\noutputs c\n"), ParseError);
  EXPECT_THROW(parse_netlist("inputs a b\nc = AND(a,b)\n"), ParseError);
  // undefined output
  EXPECT_THROW(parse_netlist("inputs a b\noutputs q\n"), ParseError);
  EXPECT_THROW(parse_netlist("inputs a b\nc = AND(a,b\noutputs c\n"), ParseError);
}

TEST(Netlist, MuxEvaluation) {
  auto net = corpus_netlist("MUX_ref.net");
  EXPECT_TRUE(evaluate(net, {{"x1", true}, {"x2", false}, {"x3", true}}).at("n4"));
  EXPECT_THROW(evaluate(net, {{"x1", true}}), InvalidArgument);
}

TEST(Netlist, IteSelectsSecondInputWhenLow) {
  GateKind ite(GateTag::ITE, 3);
  for (bool b : {false, true}) {
    for (bool c : {false, true}) {
      EXPECT_EQ(ite.apply({false, b, c}), b);
      EXPECT_EQ(ite.apply({true, b, c}), c);
    }
  }
}

TEST(Netlist, MajMatchesCarryExpression) {
  GateKind maj(GateTag::MAJ, 3);
  for (std::uint64_t v = 0; v < 8; ++v) {
    auto x = bits_msb_first(v, 3);
    const bool carry = ((x[0] != x[1]) && x[2]) || (x[0] && x[1]);
    EXPECT_EQ(maj.apply(x), carry) << v;
  }
}

TEST(Netlist, GateTruthTables) {
  auto eval = [](GateTag tag, std::vector<bool> in) { return GateKind(tag, in.size()).apply(in); };
  EXPECT_TRUE(eval(GateTag::NOT, {false}));
  EXPECT_TRUE(eval(GateTag::NAND, {true, false, true}));
  EXPECT_FALSE(eval(GateTag::NAND, {true, true, true}));
  EXPECT_TRUE(eval(GateTag::NOR, {false, false}));
  EXPECT_TRUE(eval(GateTag::XOR, {true, true, true}));
  EXPECT_FALSE(eval(GateTag::XNOR, {true, true, true}));
  EXPECT_TRUE(eval(GateTag::OR, {false, false, true}));
}

TEST(Netlist, FaultInjectionReproducesFaultyAnd) {
  auto ref = corpus_netlist("AND_ref.net");
  auto faulty = fault_inject(ref, "n1", GateKind(GateTag::NOR, 2));
  EXPECT_EQ(faulty, corpus_netlist("AND_faulty.net"));
}

TEST(Netlist, SelfInjectionIsIdentity) {
  auto ref = corpus_netlist("CARRY_ref.net");
  for (const auto& node : ref.nodes()) EXPECT_EQ(fault_inject(ref, node.name, node.kind), ref);
  EXPECT_THROW(fault_inject(ref, "nope", GateKind(GateTag::AND, 2)), InvalidArgument);
  EXPECT_THROW(fault_inject(ref, "n1", GateKind(GateTag::AND, 3)), InvalidArgument);
}

TEST(Netlist, XorFaultDiffersEverywhere) {
  auto ref = corpus_netlist("XOR_ref.net");
  auto faulty = fault_inject(ref, "n1", GateKind(GateTag::XNOR, 2));
  for (std::uint64_t v = 0; v < 8; ++v) {
    EXPECT_NE(evaluate(ref, assign(ref, v)), evaluate(faulty, assign(faulty, v))) << v;
  }
}

TEST(Netlist, RenderRoundTripsCorpus) {
  for (const auto& entry : std::filesystem::directory_iterator(testing::corpus_dir())) {
    auto net = load_netlist(entry.path());
    EXPECT_EQ(parse_netlist(render(net)), net) << entry.path();
  }
}

TEST(Netlist, CorpusDisagreementCountsMatchTable) {
  for (const auto& row : testing::reported()) {
    for (auto style : {RefStyle::flat, RefStyle::structured}) {
      auto pair = load_benchmark(testing::corpus_dir(), row.name, style);
      std::uint64_t differ = 0;
      for (std::uint64_t v = 0; v < 8; ++v) {
        auto x = bits_msb_first(v, 3);
        differ += evaluate_outputs(pair.impl, x) != evaluate_outputs(pair.ref, x);
      }
      EXPECT_EQ(differ, row.cex) << row.name << " " << to_string(style);
    }
  }
}

TEST(Netlist, StructuredReferencesAgreeWithFlat) {
  for (const auto& name : benchmark_names()) {
    auto flat = load_benchmark(testing::corpus_dir(), name, RefStyle::flat).ref;
    auto structured = load_benchmark(testing::corpus_dir(), name, RefStyle::structured).ref;
    for (std::uint64_t v = 0; v < 8; ++v) {
      auto x = bits_msb_first(v, 3);
      EXPECT_EQ(evaluate_outputs(flat, x), evaluate_outputs(structured, x)) << name << " " << v;
    }
  }
}

}  // namespace
}  // namespace qsat
