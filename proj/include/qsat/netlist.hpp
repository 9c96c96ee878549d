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
  \file netlist.hpp
  \brief Gate-level Boolean netlists: representation, text format,
         evaluation and fault injection.

  Text format (one directive per line, `#` starts a comment):

      inputs x1 x2 x3
      n1 = AND(x1,x2)
      n2 = AND(n1,x3)
      outputs n2

  Gate kinds: NOT, AND, NAND, OR, NOR, XOR, XNOR, ITE, MAJ.  Fan-ins must
  name an input or an earlier node.
*/

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qsat/error.hpp"

namespace qsat {

enum class GateTag { NOT, AND, NAND, OR, NOR, XOR, XNOR, ITE, MAJ };

inline constexpr GateTag all_gate_tags[] = {GateTag::NOT, GateTag::AND, GateTag::NAND,
                                            GateTag::OR,  GateTag::NOR, GateTag::XOR,
                                            GateTag::XNOR, GateTag::ITE, GateTag::MAJ};

inline std::string_view to_string(GateTag tag) {
  switch (tag) {
    case GateTag::NOT: return "NOT";
    case GateTag::AND: return "AND";
    case GateTag::NAND: return "NAND";
    case GateTag::OR: return "OR";
    case GateTag::NOR: return "NOR";
    case GateTag::XOR: return "XOR";
    case GateTag::XNOR: return "XNOR";
    case GateTag::ITE: return "ITE";
    case GateTag::MAJ: return "MAJ";
  }
  return "?";
}

inline std::optional<GateTag> gate_tag_from_string(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (auto tag : all_gate_tags) {
    if (to_string(tag) == upper) return tag;
  }
  return std::nullopt;
}

/// A gate operation together with its fan-in count.
class GateKind {
 public:
  /// Throws InvalidArgument when `arity` is not allowed for `tag`.
  GateKind(GateTag tag, std::size_t arity) : tag_(tag), arity_(arity) {
    if (!valid_arity(tag, arity)) {
      throw InvalidArgument(std::string(to_string(tag)) + " cannot take " +
                            std::to_string(arity) + " fan-in(s)");
    }
  }

  static bool valid_arity(GateTag tag, std::size_t arity) noexcept {
    switch (tag) {
      case GateTag::NOT: return arity == 1;
      case GateTag::ITE:
      case GateTag::MAJ: return arity == 3;
      default: return arity >= 2;
    }
  }

  GateTag tag() const noexcept { return tag_; }
  std::size_t arity() const noexcept { return arity_; }

  /// ITE(s, e, t) selects t when s is high and e otherwise.
  bool apply(const std::vector<bool>& in) const {
    if (in.size() != arity_) throw InvalidArgument("gate applied to wrong number of values");
    auto count = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
    switch (tag_) {
      case GateTag::NOT: return !in[0];
      case GateTag::AND: return count == arity_;
      case GateTag::NAND: return count != arity_;
      case GateTag::OR: return count != 0;
      case GateTag::NOR: return count == 0;
      case GateTag::XOR: return (count & 1u) != 0;
      case GateTag::XNOR: return (count & 1u) == 0;
      case GateTag::ITE: return in[0] ? in[2] : in[1];
      case GateTag::MAJ: return count >= 2;
    }
    return false;
  }

  friend bool operator==(const GateKind&, const GateKind&) = default;

 private:
  GateTag tag_;
  std::size_t arity_;
};

struct Node {
  std::string name;
  GateKind kind;
  std::vector<std::string> fanins;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Validated, topologically ordered, immutable netlist.
class Netlist {
 public:
  /// Validates the invariants and throws InvalidArgument on violation.
  Netlist(std::vector<std::string> inputs, std::vector<Node> nodes,
          std::vector<std::string> outputs)
      : inputs_(std::move(inputs)), nodes_(std::move(nodes)), outputs_(std::move(outputs)) {
    validate();
  }

  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<std::string>& outputs() const noexcept { return outputs_; }

  bool is_input(std::string_view name) const {
    return std::find(inputs_.begin(), inputs_.end(), name) != inputs_.end();
  }

  std::optional<std::size_t> node_index(std::string_view name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].name == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const Netlist&, const Netlist&) = default;

 private:
  void validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& in : inputs_) {
      if (in.empty()) throw InvalidArgument("empty input name");
      if (!seen.insert(in).second) throw InvalidArgument("duplicate name '" + in + "'");
    }
    for (const auto& node : nodes_) {
      if (node.fanins.size() != node.kind.arity()) {
        throw InvalidArgument("node '" + node.name + "' has " +
                              std::to_string(node.fanins.size()) + " fan-ins but arity " +
                              std::to_string(node.kind.arity()));
      }
      for (const auto& f : node.fanins) {
        if (!seen.contains(f)) {
          throw InvalidArgument("node '" + node.name + "' uses '" + f +
                                "' before it is defined");
        }
      }
      if (!seen.insert(node.name).second) {
        throw InvalidArgument("duplicate name '" + node.name + "'");
      }
    }
    if (outputs_.empty()) throw InvalidArgument("netlist declares no outputs");
    for (const auto& out : outputs_) {
      if (!seen.contains(out)) throw InvalidArgument("undefined output '" + out + "'");
    }
  }

  std::vector<std::string> inputs_;
  std::vector<Node> nodes_;
  std::vector<std::string> outputs_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

struct RawNode {
  std::size_t line;
  std::string name;
  GateTag tag;
  std::vector<std::string> fanins;
};

// Depth-first search over the raw definitions; true if `start` reaches itself.
inline bool on_cycle(const std::string& start,
                     const std::unordered_map<std::string, const RawNode*>& defs) {
  std::vector<std::string> stack{start};
  std::unordered_set<std::string> visited;
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    auto it = defs.find(cur);
    if (it == defs.end()) continue;
    for (const auto& f : it->second->fanins) {
      if (f == start) return true;
      if (visited.insert(f).second) stack.push_back(f);
    }
  }
  return false;
}

}  // namespace detail

/// Parses the line format described at the top of this file.
/// Throws ParseError carrying the offending line number.
inline Netlist parse_netlist(std::string_view text) {
  using detail::trim;

  std::optional<std::vector<std::string>> inputs;
  std::optional<std::vector<std::string>> outputs;
  std::size_t outputs_line = 0;
  std::vector<detail::RawNode> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto words = detail::split_words(line);
    if (words[0] == "inputs" || words[0] == "outputs") {
      auto& slot = words[0] == "inputs" ? inputs : outputs;
      if (slot) throw ParseError(line_no, "duplicate '" + words[0] + "' directive");
      if (words.size() < 2 && words[0] == "outputs") {
        throw ParseError(line_no, "'outputs' needs at least one name");
      }
      std::vector<std::string> names(words.begin() + 1, words.end());
      for (const auto& n : names) {
        if (!detail::is_identifier(n)) throw ParseError(line_no, "bad name '" + n + "'");
      }
      slot = std::move(names);
      if (words[0] == "outputs") outputs_line = line_no;
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'name = KIND(args)'");
    auto name = trim(line.substr(0, eq));
    auto rhs = trim(line.substr(eq + 1));
    if (!detail::is_identifier(name)) {
      throw ParseError(line_no, "bad node name '" + std::string(name) + "'");
    }
    auto open = rhs.find('(');
    if (open == std::string_view::npos || rhs.back() != ')') {
      throw ParseError(line_no, "expected KIND(args)");
    }
    auto kind_name = trim(rhs.substr(0, open));
    auto tag = gate_tag_from_string(kind_name);
    if (!tag) throw ParseError(line_no, "unknown gate kind '" + std::string(kind_name) + "'");

    std::vector<std::string> fanins;
    auto args = rhs.substr(open + 1, rhs.size() - open - 2);
    std::size_t apos = 0;
    while (true) {
      auto comma = args.find(',', apos);
      auto arg = trim(args.substr(apos, comma == std::string_view::npos ? args.npos : comma - apos));
      if (!detail::is_identifier(arg)) {
        throw ParseError(line_no, "bad fan-in '" + std::string(arg) + "'");
      }
      fanins.emplace_back(arg);
      if (comma == std::string_view::npos) break;
      apos = comma + 1;
    }
    if (!GateKind::valid_arity(*tag, fanins.size())) {
      throw ParseError(line_no, "arity mismatch: " + std::string(to_string(*tag)) + " with " +
                                    std::to_string(fanins.size()) + " fan-in(s)");
    }
    raw.push_back({line_no, std::string(name), *tag, std::move(fanins)});
  }

  if (!inputs) throw ParseError(0, "missing 'inputs' directive");
  if (!outputs) throw ParseError(0, "missing 'outputs' directive");

  std::unordered_map<std::string, std::size_t> defined_at;  // name -> line
  std::unordered_map<std::string, const detail::RawNode*> defs;
  for (const auto& in : *inputs) {
    if (!defined_at.emplace(in, 0).second) throw ParseError(0, "duplicate input '" + in + "'");
  }
  for (const auto& r : raw) {
    if (!defined_at.emplace(r.name, r.line).second) {
      throw ParseError(r.line, "duplicate name '" + r.name + "'");
    }
    defs.emplace(r.name, &r);
  }

  std::vector<Node> nodes;
  nodes.reserve(raw.size());
  for (const auto& r : raw) {
    for (const auto& f : r.fanins) {
      auto it = defined_at.find(f);
      if (it == defined_at.end()) throw ParseError(r.line, "undefined fan-in '" + f + "'");
      if (it->second >= r.line && it->second != 0) {
        if (detail::on_cycle(r.name, defs)) {
          throw ParseError(r.line, "cyclic reference through '" + r.name + "'");
        }
        throw ParseError(r.line, "'" + f + "' is used before its definition");
      }
    }
    nodes.push_back({r.name, GateKind(r.tag, r.fanins.size()), r.fanins});
  }
  for (const auto& out : *outputs) {
    if (!defined_at.contains(out)) throw ParseError(outputs_line, "undefined output '" + out + "'");
  }
  return Netlist(std::move(*inputs), std::move(nodes), std::move(*outputs));
}

/// Writes `net` in the text format; parse_netlist(render(net)) == net.
inline std::string render(const Netlist& net) {
  std::ostringstream out;
  out << "inputs";
  for (const auto& in : net.inputs()) out << ' ' << in;
  out << '\n';
  for (const auto& node : net.nodes()) {
    out << node.name << " = " << to_string(node.kind.tag()) << '(';
    for (std::size_t i = 0; i < node.fanins.size(); ++i) {
      out << (i ? "," : "") << node.fanins[i];
    }
    out << ")\n";
  }
  out << "outputs";
  for (const auto& o : net.outputs()) out << ' ' << o;
  out << '\n';
  return out.str();
}

/// Evaluates every signal for the input bits given in declaration order.
/// Result holds inputs first, then nodes, in netlist order.
inline std::vector<bool> evaluate_signals(const Netlist& net, const std::vector<bool>& input_bits) {
  if (input_bits.size() != net.inputs().size()) {
    throw InvalidArgument("expected " + std::to_string(net.inputs().size()) + " input values");
  }
  std::unordered_map<std::string_view, std::size_t> slot;
  std::vector<bool> values(input_bits);
  for (std::size_t i = 0; i < net.inputs().size(); ++i) slot.emplace(net.inputs()[i], i);
  std::vector<bool> fanin_values;
  for (const auto& node : net.nodes()) {
    fanin_values.clear();
    for (const auto& f : node.fanins) fanin_values.push_back(values[slot.at(f)]);
    values.push_back(node.kind.apply(fanin_values));
    slot.emplace(node.name, values.size() - 1);
  }
  return values;
}

/// Output bits in declaration order of `outputs`.
inline std::vector<bool> evaluate_outputs(const Netlist& net, const std::vector<bool>& input_bits) {
  auto values = evaluate_signals(net, input_bits);
  std::vector<bool> out;
  for (const auto& o : net.outputs()) {
    if (auto idx = net.node_index(o)) {
      out.push_back(values[net.inputs().size() + *idx]);
    } else {
      auto it = std::find(net.inputs().begin(), net.inputs().end(), o);
      out.push_back(values[static_cast<std::size_t>(it - net.inputs().begin())]);
    }
  }
  return out;
}

/// Name-keyed evaluation. Throws InvalidArgument when an input is missing.
inline std::map<std::string, bool> evaluate(const Netlist& net,
                                            const std::map<std::string, bool>& assignment) {
  std::vector<bool> bits;
  for (const auto& in : net.inputs()) {
    auto it = assignment.find(in);
    if (it == assignment.end()) throw InvalidArgument("missing value for input '" + in + "'");
    bits.push_back(it->second);
  }
  auto out_bits = evaluate_outputs(net, bits);
  std::map<std::string, bool> result;
  for (std::size_t i = 0; i < net.outputs().size(); ++i) result[net.outputs()[i]] = out_bits[i];
  return result;
}

/// Copy of `net` with the gate operation of `node_name` replaced by `kind`.
inline Netlist fault_inject(const Netlist& net, std::string_view node_name, GateKind kind) {
  auto idx = net.node_index(node_name);
  if (!idx) throw InvalidArgument("unknown node '" + std::string(node_name) + "'");
  if (net.nodes()[*idx].kind.arity() != kind.arity()) {
    throw InvalidArgument("replacement arity differs from node '" + std::string(node_name) + "'");
  }
  auto nodes = net.nodes();
  nodes[*idx].kind = kind;
  return Netlist(net.inputs(), std::move(nodes), net.outputs());
}

}  // namespace qsat
