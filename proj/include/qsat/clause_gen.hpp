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
  \file clause_gen.hpp
  \brief ESOP clause networks: per-gate ESOP clauses, miter assembly and
         counter-example exclusion.

  Every auxiliary variable `a` is defined by one ESOP clause that evaluates
  to 1 exactly when `a` agrees with the gate it stands for (a <=> G).  The
  clause always contains `a` as a lone literal, so the consistent value of
  `a` is unique for every assignment of the earlier variables.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qsat/error.hpp"
#include "qsat/netlist.hpp"

namespace qsat {

struct Literal {
  std::string var;
  bool positive = true;

  Literal negated() const { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using ProductTerm = std::vector<Literal>;

/// constant ^ term_1 ^ term_2 ^ ... where each term is a conjunction of literals.
struct EsopExpr {
  bool constant = false;
  std::vector<ProductTerm> terms;

  /// Merges repeated literals, drops contradictory terms (x & !x), moves empty
  /// terms into the constant and cancels identical terms pairwise.
  EsopExpr& normalize() {
    std::vector<ProductTerm> kept;
    for (auto term : terms) {
      std::sort(term.begin(), term.end());
      term.erase(std::unique(term.begin(), term.end()), term.end());
      bool contradictory = false;
      for (std::size_t i = 1; i < term.size(); ++i) {
        if (term[i].var == term[i - 1].var) contradictory = true;
      }
      if (contradictory) continue;
      if (term.empty()) {
        constant = !constant;
        continue;
      }
      auto same = std::find(kept.begin(), kept.end(), term);
      if (same != kept.end()) {
        kept.erase(same);
      } else {
        kept.push_back(std::move(term));
      }
    }
    terms = std::move(kept);
    return *this;
  }

  template <typename Lookup>
  bool evaluate(Lookup&& value_of) const {
    bool acc = constant;
    for (const auto& term : terms) {
      bool prod = true;
      for (const auto& lit : term) {
        if (static_cast<bool>(value_of(lit.var)) != lit.positive) {
          prod = false;
          break;
        }
      }
      acc ^= prod;
    }
    return acc;
  }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    if (constant || terms.empty()) {
      out << (constant ? '1' : '0');
      first = false;
    }
    for (const auto& term : terms) {
      if (!first) out << " ^ ";
      first = false;
      for (std::size_t i = 0; i < term.size(); ++i) {
        out << (i ? "&" : "") << (term[i].positive ? "" : "!") << term[i].var;
      }
    }
    return out.str();
  }

  friend bool operator==(const EsopExpr&, const EsopExpr&) = default;
};

/// ESOP clause for `aux <=> kind(fanins)`.
///
/// AND, NAND, XOR, XNOR, ITE, MAJ and NOT use the `1 ^ aux ^ G` shape;
/// OR and NOR use `aux ^ AND(!x_i)` so that each yields a single product.
/// Negated kinds toggle the constant.
inline EsopExpr esop_of_gate(const GateKind& kind, const std::string& aux,
                             const std::vector<Literal>& fanins) {
  if (fanins.size() != kind.arity()) throw InvalidArgument("fan-in count does not match arity");
  EsopExpr e;
  e.terms.push_back({Literal{aux, true}});
  auto all_of = [&](bool flip) {
    ProductTerm t;
    for (const auto& l : fanins) t.push_back(flip ? l.negated() : l);
    return t;
  };
  switch (kind.tag()) {
    case GateTag::NOT:
      // 1 ^ aux ^ !x == aux ^ x
      e.terms.push_back({fanins[0]});
      break;
    case GateTag::AND:
    case GateTag::NAND:
      e.constant = kind.tag() == GateTag::AND;
      e.terms.push_back(all_of(false));
      break;
    case GateTag::OR:
    case GateTag::NOR:
      e.constant = kind.tag() == GateTag::NOR;
      e.terms.push_back(all_of(true));
      break;
    case GateTag::XOR:
    case GateTag::XNOR:
      e.constant = kind.tag() == GateTag::XOR;
      for (const auto& l : fanins) e.terms.push_back({l});
      break;
    case GateTag::ITE:
      // s ? t : e  ==  e ^ s&e ^ s&t
      e.constant = true;
      e.terms.push_back({fanins[1]});
      e.terms.push_back({fanins[0], fanins[1]});
      e.terms.push_back({fanins[0], fanins[2]});
      break;
    case GateTag::MAJ:
      e.constant = true;
      e.terms.push_back({fanins[0], fanins[1]});
      e.terms.push_back({fanins[0], fanins[2]});
      e.terms.push_back({fanins[1], fanins[2]});
      break;
  }
  // Repeated fan-ins (AND(x,x), XOR(x,x)) need merging and cancellation;
  // otherwise the term order above is kept so emitted gates follow it.
  std::unordered_set<std::string> seen{aux};
  bool repeated = false;
  for (const auto& l : fanins) repeated |= !seen.insert(l.var).second;
  if (repeated) e.normalize();
  return e;
}

struct AuxDef {
  std::string name;
  EsopExpr clause;

  friend bool operator==(const AuxDef&, const AuxDef&) = default;
};

/// Full assignment over the network's variables: inputs then auxiliaries,
/// each in declaration order.
struct CexRecord {
  std::vector<bool> bits;

  /// '0'/'1' characters, X then A, left to right in declaration order.
  std::string to_bitstring() const {
    std::string s;
    for (bool b : bits) s.push_back(b ? '1' : '0');
    return s;
  }

  static CexRecord from_bitstring(std::string_view s) {
    CexRecord r;
    for (char c : s) {
      if (c != '0' && c != '1') throw InvalidArgument("bitstring may only contain 0 and 1");
      r.bits.push_back(c == '1');
    }
    return r;
  }

  friend bool operator==(const CexRecord&, const CexRecord&) = default;
  friend auto operator<=>(const CexRecord& a, const CexRecord& b) {
    return a.to_bitstring() <=> b.to_bitstring();
  }
};

/// Inputs, auxiliary definitions, the miter output variable and the list of
/// excluded counter-examples.  Immutable; every mutator returns a new value.
class ClauseNetwork {
 public:
  ClauseNetwork(std::vector<std::string> inputs, std::vector<AuxDef> aux_defs,
                std::optional<std::string> top = std::nullopt,
                std::vector<CexRecord> exclusions = {})
      : inputs_(std::move(inputs)),
        aux_defs_(std::move(aux_defs)),
        top_(std::move(top)),
        exclusions_(std::move(exclusions)) {
    compile();
  }

  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::vector<AuxDef>& aux_defs() const noexcept { return aux_defs_; }
  const std::optional<std::string>& top() const noexcept { return top_; }
  const std::vector<CexRecord>& exclusions() const noexcept { return exclusions_; }

  std::size_t num_inputs() const noexcept { return inputs_.size(); }
  std::size_t num_aux() const noexcept { return aux_defs_.size(); }
  /// Size of the search space register, |X| + |A|.
  std::size_t num_vars() const noexcept { return inputs_.size() + aux_defs_.size(); }

  std::vector<std::string> variables() const {
    auto v = inputs_;
    for (const auto& d : aux_defs_) v.push_back(d.name);
    return v;
  }

  std::optional<std::size_t> var_index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> top_index() const {
    return top_ ? var_index(*top_) : std::nullopt;
  }

  /// Same network without any exclusions (the unaltered miter F).
  ClauseNetwork without_exclusions() const { return ClauseNetwork(inputs_, aux_defs_, top_); }

  /// Index form of one clause: constant plus terms of (variable index, polarity).
  struct CompiledClause {
    bool constant = false;
    std::vector<std::vector<std::pair<std::size_t, bool>>> terms;
  };
  const CompiledClause& compiled(std::size_t aux) const { return compiled_[aux]; }

  bool clause_value(std::size_t aux, const std::vector<bool>& assignment) const {
    const auto& c = compiled_[aux];
    bool acc = c.constant;
    for (const auto& term : c.terms) {
      bool prod = true;
      for (auto [idx, pos] : term) {
        if (assignment[idx] != pos) {
          prod = false;
          break;
        }
      }
      acc ^= prod;
    }
    return acc;
  }

  /// The unique consistent assignment extending the given input bits.
  std::vector<bool> propagate(const std::vector<bool>& input_bits) const {
    if (input_bits.size() != inputs_.size()) throw InvalidArgument("input width mismatch");
    std::vector<bool> a(input_bits);
    a.resize(num_vars(), false);
    for (std::size_t j = 0; j < aux_defs_.size(); ++j) {
      auto slot = inputs_.size() + j;
      a[slot] = false;
      if (!clause_value(j, a)) a[slot] = true;
    }
    return a;
  }

  /// True iff every auxiliary agrees with its definition.
  bool consistent(const std::vector<bool>& assignment) const {
    check_width(assignment);
    for (std::size_t j = 0; j < aux_defs_.size(); ++j) {
      if (!clause_value(j, assignment)) return false;
    }
    return true;
  }

  /// Value of the top variable, F.  False when there is no top.
  bool top_value(const std::vector<bool>& assignment) const {
    check_width(assignment);
    auto t = top_index();
    return t ? assignment[*t] : false;
  }

  /// F xor (assignment is excluded): the augmented miter F-hat.
  bool miter_value(const std::vector<bool>& assignment) const {
    bool v = top_value(assignment);
    for (const auto& ex : exclusions_) {
      if (ex.bits == assignment) v = !v;
    }
    return v;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "inputs";
    for (const auto& in : inputs_) out << ' ' << in;
    out << '\n';
    for (const auto& d : aux_defs_) out << d.name << " = " << d.clause.to_string() << '\n';
    if (top_) out << "top = " << *top_ << '\n';
    for (const auto& ex : exclusions_) out << "exclude " << ex.to_bitstring() << '\n';
    return out.str();
  }

  friend bool operator==(const ClauseNetwork& a, const ClauseNetwork& b) {
    return a.inputs_ == b.inputs_ && a.aux_defs_ == b.aux_defs_ && a.top_ == b.top_ &&
           a.exclusions_ == b.exclusions_;
  }

 private:
  void check_width(const std::vector<bool>& assignment) const {
    if (assignment.size() != num_vars()) {
      throw InvalidArgument("assignment has " + std::to_string(assignment.size()) +
                            " bits, network has " + std::to_string(num_vars()) + " variables");
    }
  }

  void compile() {
    for (const auto& in : inputs_) {
      if (!index_.emplace(in, index_.size()).second) {
        throw InvalidArgument("duplicate variable '" + in + "'");
      }
    }
    for (const auto& d : aux_defs_) {
      auto self = index_.size();
      if (!index_.emplace(d.name, self).second) {
        throw InvalidArgument("variable '" + d.name + "' defined twice");
      }
      CompiledClause cc;
      cc.constant = d.clause.constant;
      std::size_t self_terms = 0;
      for (const auto& term : d.clause.terms) {
        std::vector<std::pair<std::size_t, bool>> ct;
        std::unordered_set<std::string> vars;
        for (const auto& lit : term) {
          auto it = index_.find(lit.var);
          if (it == index_.end()) {
            throw InvalidArgument("clause of '" + d.name + "' uses undefined variable '" +
                                  lit.var + "'");
          }
          if (!vars.insert(lit.var).second) {
            throw InvalidArgument("repeated variable in a product term of '" + d.name + "'");
          }
          if (it->second == self) {
            if (term.size() != 1) {
              throw InvalidArgument("'" + d.name + "' must appear as a lone literal");
            }
            ++self_terms;
          }
          ct.emplace_back(it->second, lit.positive);
        }
        cc.terms.push_back(std::move(ct));
      }
      if (self_terms != 1) {
        throw InvalidArgument("clause of '" + d.name + "' must contain it exactly once");
      }
      compiled_.push_back(std::move(cc));
    }
    if (top_ && !index_.contains(*top_)) {
      throw InvalidArgument("top variable '" + *top_ + "' is undefined");
    }
    for (const auto& ex : exclusions_) check_width(ex.bits);
  }

  std::vector<std::string> inputs_;
  std::vector<AuxDef> aux_defs_;
  std::optional<std::string> top_;
  std::vector<CexRecord> exclusions_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<CompiledClause> compiled_;
};

/// Name of the variable carrying netlist signal `signal` once the netlist's
/// nodes are renamed with `prefix`.
inline std::string signal_variable(const Netlist& net, const std::string& signal,
                                   const std::string& prefix) {
  return net.is_input(signal) ? signal : prefix + signal;
}

/// One auxiliary definition per gate node, in netlist order.  Node names get
/// `prefix` prepended; inputs keep their names.
inline ClauseNetwork build_clauses(const Netlist& net, const std::string& prefix = "") {
  std::vector<AuxDef> defs;
  defs.reserve(net.nodes().size());
  for (const auto& node : net.nodes()) {
    std::vector<Literal> fanins;
    for (const auto& f : node.fanins) fanins.push_back({signal_variable(net, f, prefix), true});
    auto aux = prefix + node.name;
    defs.push_back({aux, esop_of_gate(node.kind, aux, fanins)});
  }
  return ClauseNetwork(net.inputs(), std::move(defs));
}

/// Miter of an implementation against a reference.
///
/// One output: `miter <=> b ^ c` over the two output variables.
/// m >= 2 outputs: `diff_i <=> b_i ^ c_i` for each output and
/// `miter <=> OR(diff_i)`.  Top is `miter` in both cases.  Implementation
/// nodes are prefixed `impl.`, reference nodes `ref.`.
inline ClauseNetwork build_miter(const Netlist& impl, const Netlist& ref) {
  {
    auto a = impl.inputs(), b = ref.inputs();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw InvalidArgument("implementation and reference inputs differ");
  }
  if (impl.outputs().size() != ref.outputs().size()) {
    throw InvalidArgument("implementation and reference output counts differ");
  }
  const std::string ip = "impl.", rp = "ref.";
  auto defs = build_clauses(impl, ip).aux_defs();
  auto ref_defs = build_clauses(ref, rp).aux_defs();
  defs.insert(defs.end(), ref_defs.begin(), ref_defs.end());

  const GateKind xor2(GateTag::XOR, 2);
  const auto m = impl.outputs().size();
  if (m == 1) {
    defs.push_back({"miter", esop_of_gate(xor2, "miter",
                                          {{signal_variable(impl, impl.outputs()[0], ip), true},
                                           {signal_variable(ref, ref.outputs()[0], rp), true}})});
  } else {
    std::vector<Literal> diffs;
    for (std::size_t i = 0; i < m; ++i) {
      auto name = "diff" + std::to_string(i + 1);
      defs.push_back({name, esop_of_gate(xor2, name,
                                         {{signal_variable(impl, impl.outputs()[i], ip), true},
                                          {signal_variable(ref, ref.outputs()[i], rp), true}})});
      diffs.push_back({name, true});
    }
    defs.push_back({"miter", esop_of_gate(GateKind(GateTag::OR, m), "miter", diffs)});
  }
  return ClauseNetwork(impl.inputs(), std::move(defs), std::string("miter"));
}

/// F-hat = F ^ CEX: appends `cex` to the exclusion list.
///
/// The assignment must be consistent with the auxiliary definitions: the
/// exclusion term is realized over X and A only, and an inconsistent
/// assignment would otherwise add a spurious marked state.
inline ClauseNetwork exclude_cex(const ClauseNetwork& cn, const CexRecord& cex) {
  if (cex.bits.size() != cn.num_vars()) {
    throw InvalidArgument("exclusion covers " + std::to_string(cex.bits.size()) +
                          " variables, network has " + std::to_string(cn.num_vars()));
  }
  auto ex = cn.exclusions();
  if (std::find(ex.begin(), ex.end(), cex) != ex.end()) {
    throw InvalidArgument("assignment " + cex.to_bitstring() + " is already excluded");
  }
  if (!cn.consistent(cex.bits)) {
    throw InvalidArgument("assignment " + cex.to_bitstring() +
                          " is inconsistent with the auxiliary definitions");
  }
  ex.push_back(cex);
  return ClauseNetwork(cn.inputs(), cn.aux_defs(), cn.top(), std::move(ex));
}

}  // namespace qsat
