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

// qsat command-line front end.
//
// Exit codes: 0 success (solve: UNSAT), 1 solve found a CEX (SAT),
// 2 usage, file, parse or capacity error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsat/bench.hpp"
#include "qsat/json_io.hpp"
#include "qsat/qasm.hpp"

namespace {

using namespace qsat;

constexpr int exit_unsat = 0;
constexpr int exit_sat = 1;
constexpr int exit_error = 2;

struct Inputs {
  std::vector<std::string> files;
  std::string bench;
  std::string corpus = QSAT_CORPUS_DIR;
  std::string ref_style = "flat";
  std::vector<std::string> exclude;
};

struct Options {
  Inputs in;
  std::optional<std::uint64_t> m;
  std::uint64_t shots = 4096;
  std::uint64_t seed = 7;
  bool exhaustive = false;
  bool sampled = false;
  std::string mode = "auto";
  std::string circuit = "qsat";
  bool transpiled = true;
  bool include_fa = false;
  bool no_simulate = false;
  bool json = false;
  std::string csv;
  std::string output;
  std::string dump_state;
  std::optional<std::size_t> qubit_cap;
  unsigned workers = 0;
};

void add_inputs(CLI::App* cmd, Inputs& in, std::size_t max_files) {
  cmd->add_option("files", in.files, max_files == 1 ? "netlist file" : "implementation and reference netlists")
      ->expected(0, static_cast<int>(max_files));
  cmd->add_option("--bench", in.bench, "use a corpus benchmark instead of files");
  cmd->add_option("--corpus", in.corpus, "corpus directory");
  cmd->add_option("--ref-style", in.ref_style, "reference model for --bench")
      ->check(CLI::IsMember({"flat", "structured"}));
}

void add_exclude(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--exclude", in.exclude, "exclude a known CEX (bitstring over X then A)");
}

ClauseNetwork load_network(const Inputs& in) {
  ClauseNetwork cn = [&] {
    if (!in.bench.empty()) {
      if (!in.files.empty()) throw InvalidArgument("give either files or --bench, not both");
      auto pair = load_benchmark(in.corpus, in.bench, ref_style_from_string(in.ref_style));
      return build_miter(pair.impl, pair.ref);
    }
    if (in.files.size() == 1) return build_clauses(load_netlist(in.files[0]));
    if (in.files.size() == 2) return build_miter(load_netlist(in.files[0]), load_netlist(in.files[1]));
    throw InvalidArgument("expected an implementation and a reference netlist");
  }();
  for (const auto& bits : in.exclude) cn = exclude_cex(cn, CexRecord::from_bitstring(bits));
  return cn;
}

SimulatorConfig sim_config(const Options& o) {
  SimulatorConfig cfg;
  if (o.qubit_cap) cfg.qubit_cap = *o.qubit_cap;
  return cfg;
}

std::uint64_t cex_count_for(const ClauseNetwork& cn, const Options& o) {
  if (o.m) return *o.m;
  return enumerate_cex(cn.without_exclusions()).cex_count;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int cmd_parse(const Options& o) {
  if (o.in.files.size() != 1) throw InvalidArgument("parse takes one netlist file");
  auto net = load_netlist(o.in.files[0]);
  if (o.json) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : net.nodes()) {
      nodes.push_back({{"name", n.name}, {"kind", to_string(n.kind.tag())}, {"fanins", n.fanins}});
    }
    std::cout << nlohmann::json{{"schema", json_schema},
                                {"inputs", net.inputs()},
                                {"outputs", net.outputs()},
                                {"nodes", nodes}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << render(net);
  }
  return exit_unsat;
}

int cmd_clauses(const Options& o) {
  auto cn = load_network(o.in);
  std::cout << cn.to_string();
  return exit_unsat;
}

int cmd_resources(const Options& o) {
  auto cn = load_network(o.in);
  const auto m = cex_count_for(cn, o);
  if (m == 0) throw InvalidArgument("circuits are equivalent; no Grover iterations to size");
  auto r = network_resources(cn, m, chain_mode_from_string(o.mode));
  if (o.json) {
    auto j = to_json(r);
    j["schema"] = json_schema;
    j["A"] = cn.num_aux();
    j["m"] = m;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "q=" << r.q << " A=" << cn.num_aux() << " gi=" << r.gi << " cx=" << r.cx
              << " u=" << r.u << " depth=" << r.depth << "\n";
  }
  if (!o.csv.empty()) {
    std::ostringstream row;
    row << "q,A,gi,cx,u,depth\n"
        << r.q << "," << cn.num_aux() << "," << r.gi << "," << r.cx << "," << r.u << ","
        << r.depth << "\n";
    write_text(o.csv, row.str());
  }
  return exit_unsat;
}

int cmd_emit_qasm(const Options& o) {
  auto cn = load_network(o.in);
  QCircuit qc = [&] {
    if (o.circuit == "vf") return build_vf(cn);
    if (o.circuit == "uf") return build_uf(cn);
    const auto m = cex_count_for(cn, o);
    const auto gi = m == 0 ? 0 : grover_iterations(cn.num_vars(), m);
    return build_qsat_network(cn, cn.without_exclusions(), gi);
  }();
  write_text(o.output, emit_qasm(transpile(qc, chain_mode_from_string(o.mode)).circuit));
  return exit_unsat;
}

int cmd_solve(const Options& o) {
  auto cn = load_network(o.in);
  QsatConfig cfg;
  cfg.cex_count_hint = cex_count_for(cn, o);
  cfg.shots = o.shots;
  cfg.seed = o.seed;
  cfg.sim = sim_config(o);
  if (o.exhaustive && o.sampled) throw InvalidArgument("--exhaustive and --sampled conflict");
  cfg.exhaustive = o.exhaustive || (!o.sampled && layout_of(cn).num_qubits() <= 22);
  auto result = solve(cn, cfg);
  if (!o.dump_state.empty()) {
    std::ofstream out(o.dump_state, std::ios::binary);
    if (!out) throw Error("cannot write " + o.dump_state);
    dump(run_grover(cn, cfg).final_state, out);
  }
  std::cout << to_json(result, cn).dump(2) << "\n";
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  return result.verdict == Verdict::sat ? exit_sat : exit_unsat;
}

int cmd_oracle(const Options& o) {
  auto cn = load_network(o.in);
  auto report = enumerate_cex(cn);
  if (o.json) {
    std::cout << to_json(report, cn).dump(2) << "\n";
    return exit_unsat;
  }
  const auto vars = cn.variables();
  for (const auto& v : vars) std::cout << std::setw(static_cast<int>(v.size()) + 1) << v;
  std::cout << "\n";
  for (const auto& c : report.cex_list) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::cout << std::setw(static_cast<int>(vars[i].size()) + 1) << (c.bits[i] ? 1 : 0);
    }
    std::cout << "\n";
  }
  std::cout << report.cex_count << " CEX" << (report.cex_count == 1 ? "" : "s")
            << (report.equivalent ? " (equivalent)" : "") << "\n";
  return exit_unsat;
}

int cmd_bench(const Options& o) {
  BenchOptions opt;
  opt.include_fa = o.include_fa;
  opt.simulate = !o.no_simulate;
  if (o.in.ref_style != "both") opt.only_style = ref_style_from_string(o.in.ref_style);
  opt.shots = o.shots;
  opt.seed = o.seed;
  opt.mode = chain_mode_from_string(o.mode);
  opt.sim = sim_config(o);
  if (o.sampled) opt.exhaustive_max_qubits = 0;
  if (o.workers > 0) opt.workers = o.workers;
  if (o.include_fa && opt.sim.qubit_cap < 30) {
    std::cerr << "note: FA needs up to 30 qubits; raise --qubit-cap to simulate it\n";
  }
  auto rows = run_bench(o.in.corpus, opt);
  if (!o.csv.empty()) write_text(o.csv, bench_csv(rows));
  if (o.json) {
    std::cout << to_json(rows).dump(2) << "\n";
  } else if (o.csv != "-") {
    std::cout << bench_csv(rows);
  }
  return exit_unsat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum SAT equivalence checker for small combinational netlists"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "parse a netlist and print its canonical form");
  parse->add_option("file", o.in.files, "netlist file")->required();
  parse->add_flag("--json", o.json, "emit JSON");

  auto* clauses = app.add_subcommand("clauses", "print the ESOP clause network");
  add_inputs(clauses, o.in, 2);
  add_exclude(clauses, o.in);

  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", o.mode, "MCX decomposition")
        ->check(CLI::IsMember({"v-chain", "v-chain-dirty", "auto"}));
  };
  auto add_m = [&](CLI::App* cmd) {
    cmd->add_option("--m", o.m, "number of CEXs (default: classical oracle)");
  };

  auto* resources = app.add_subcommand("resources", "report q, A, GI and transpiled gate counts");
  add_inputs(resources, o.in, 2);
  add_mode(resources);
  add_m(resources);
  resources->add_flag("--json", o.json, "emit JSON");
  resources->add_option("--csv", o.csv, "write a CSV row to this path ('-' for stdout)");

  auto* qasm = app.add_subcommand("emit-qasm", "write the transpiled circuit as OpenQASM 2.0");
  add_inputs(qasm, o.in, 2);
  add_exclude(qasm, o.in);
  add_mode(qasm);
  add_m(qasm);
  qasm->add_option("--circuit", o.circuit, "which circuit")
      ->check(CLI::IsMember({"vf", "uf", "qsat"}));
  qasm->add_option("-o,--output", o.output, "output path (default stdout)");

  auto* solve_cmd = app.add_subcommand("solve", "run the Grover search and report CEXs as JSON");
  add_inputs(solve_cmd, o.in, 2);
  add_exclude(solve_cmd, o.in);
  add_m(solve_cmd);
  solve_cmd->add_option("--shots", o.shots, "shots when sampling")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", o.seed, "sampling seed");
  solve_cmd->add_flag("--exhaustive", o.exhaustive, "exact probabilities from the statevector");
  solve_cmd->add_flag("--sampled", o.sampled, "sample shots even when exact mode fits");
  solve_cmd->add_option("--qubit-cap", o.qubit_cap, "simulator qubit limit");
  solve_cmd->add_option("--dump-state", o.dump_state, "write the final statevector (f64 re/im)");
  solve_cmd->add_flag("--json", o.json, "emit JSON (always on)");

  auto* oracle = app.add_subcommand("oracle", "enumerate CEXs classically");
  add_inputs(oracle, o.in, 2);
  add_exclude(oracle, o.in);
  oracle->add_flag("--json", o.json, "emit JSON");

  auto* bench = app.add_subcommand("bench", "resource and SAT-probability table over the corpus");
  bench->add_option("--corpus", o.in.corpus, "corpus directory");
  bench->add_option("--ref-style", o.in.ref_style, "reference models to include")
      ->check(CLI::IsMember({"flat", "structured", "both"}));
  bench->add_flag("--include-fa", o.include_fa, "simulate the full adder too");
  bench->add_flag("--no-simulate", o.no_simulate, "resources only");
  bench->add_flag("--sampled", o.sampled, "sample shots instead of exact probabilities");
  bench->add_option("--shots", o.shots, "shots when sampling")->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed, "sampling seed");
  add_mode(bench);
  bench->add_option("--qubit-cap", o.qubit_cap, "simulator qubit limit");
  bench->add_option("--workers", o.workers, "worker threads");
  bench->add_flag("--json", o.json, "emit JSON");
  bench->add_option("--csv", o.csv, "write CSV to this path ('-' for stdout)");
  bench->callback([&] {
    if (bench->count("--ref-style") == 0) o.in.ref_style = "both";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_error;
  }

  try {
    if (*parse) return cmd_parse(o);
    if (*clauses) return cmd_clauses(o);
    if (*resources) return cmd_resources(o);
    if (*qasm) return cmd_emit_qasm(o);
    if (*solve_cmd) return cmd_solve(o);
    if (*oracle) return cmd_oracle(o);
    if (*bench) return cmd_bench(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
