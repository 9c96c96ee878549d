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
  \file bench.hpp
  \brief Benchmark corpus loading and the resource/SAT-probability table.

  Corpus layout: `<NAME>_faulty.net`, `<NAME>_ref.net` (two-input gate
  reference) and `<NAME>_ref_structured.net` (three-input gate reference)
  for NAME in AND NAND OR NOR XOR XNOR MUX CARRY FA.
*/

#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qsat/clause_gen.hpp"
#include "qsat/error.hpp"
#include "qsat/grover.hpp"
#include "qsat/netlist.hpp"
#include "qsat/oracle.hpp"
#include "qsat/resources.hpp"
#include "qsat/transpile.hpp"

namespace qsat {

enum class RefStyle { flat, structured };

inline std::string_view to_string(RefStyle s) { return s == RefStyle::flat ? "flat" : "structured"; }

inline RefStyle ref_style_from_string(std::string_view s) {
  if (s == "flat") return RefStyle::flat;
  if (s == "structured") return RefStyle::structured;
  throw InvalidArgument("unknown reference style '" + std::string(s) + "'");
}

inline const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names{"AND", "NAND", "OR",    "NOR", "XOR",
                                              "XNOR", "MUX", "CARRY", "FA"};
  return names;
}

inline Netlist load_netlist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_netlist(buf.str());
  } catch (const ParseError& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

struct BenchmarkPair {
  Netlist impl;
  Netlist ref;
};

inline BenchmarkPair load_benchmark(const std::filesystem::path& dir, const std::string& name,
                                    RefStyle style) {
  auto ref_file = name + (style == RefStyle::flat ? "_ref.net" : "_ref_structured.net");
  return {load_netlist(dir / (name + "_faulty.net")), load_netlist(dir / ref_file)};
}

struct Improvement {
  double q = 0, cx = 0, u = 0, depth = 0;
};

struct BenchRow {
  std::string name;
  RefStyle style = RefStyle::flat;
  std::size_t aux = 0;
  ResourceReport res;
  std::uint64_t cex_count = 0;
  std::optional<double> p_sat;   ///< empty when simulation was skipped
  bool exhaustive = false;
  std::optional<Improvement> improvement;  ///< structured rows vs flat
};

struct BenchOptions {
  bool include_fa = false;
  bool simulate = true;
  std::optional<RefStyle> only_style;
  std::uint64_t shots = 4096;
  std::uint64_t seed = 7;
  ChainMode mode = ChainMode::automatic;
  std::size_t exhaustive_max_qubits = 22;
  SimulatorConfig sim{};
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

/// 100 (baseline - value) / baseline
inline double improvement_percent(double baseline, double value) {
  return baseline == 0 ? 0.0 : 100.0 * (baseline - value) / baseline;
}

inline BenchRow bench_row(const std::filesystem::path& dir, const std::string& name,
                          RefStyle style, const BenchOptions& opt) {
  auto pair = load_benchmark(dir, name, style);
  auto cn = build_miter(pair.impl, pair.ref);
  BenchRow row;
  row.name = name;
  row.style = style;
  row.aux = cn.num_aux();
  row.cex_count = enumerate_cex(cn).cex_count;
  if (row.cex_count > 0) {
    row.res = network_resources(cn, row.cex_count, opt.mode);
  } else {
    row.res.q = layout_of(cn).num_qubits();
  }
  const bool wanted = opt.simulate && (name != "FA" || opt.include_fa);
  if (wanted && row.res.q <= opt.sim.qubit_cap) {
    QsatConfig cfg;
    cfg.cex_count_hint = row.cex_count;
    cfg.shots = opt.shots;
    cfg.seed = opt.seed;
    cfg.exhaustive = row.res.q <= opt.exhaustive_max_qubits;
    cfg.sim = opt.sim;
    row.exhaustive = cfg.exhaustive;
    row.p_sat = solve(cn, cfg).p_sat;
  }
  return row;
}

/// One row per benchmark and reference style, in corpus order (flat first).
/// Rows are computed by a worker pool; ordering does not depend on it.
inline std::vector<BenchRow> run_bench(const std::filesystem::path& dir,
                                       const BenchOptions& opt = BenchOptions{}) {
  struct Job {
    std::string name;
    RefStyle style;
  };
  std::vector<Job> jobs;
  for (const auto& name : benchmark_names()) {
    for (auto style : {RefStyle::flat, RefStyle::structured}) {
      if (!opt.only_style || *opt.only_style == style) jobs.push_back({name, style});
    }
  }
  std::vector<std::optional<BenchRow>> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        rows[i] = bench_row(dir, jobs[i].name, jobs[i].style, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(std::max(1u, opt.workers), jobs.size());
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<BenchRow> out;
  for (auto& r : rows) out.push_back(std::move(*r));
  for (auto& r : out) {
    if (r.style != RefStyle::structured) continue;
    for (const auto& base : out) {
      if (base.name == r.name && base.style == RefStyle::flat) {
        r.improvement = Improvement{
            improvement_percent(static_cast<double>(base.res.q), static_cast<double>(r.res.q)),
            improvement_percent(static_cast<double>(base.res.cx), static_cast<double>(r.res.cx)),
            improvement_percent(static_cast<double>(base.res.u), static_cast<double>(r.res.u)),
            improvement_percent(static_cast<double>(base.res.depth),
                                static_cast<double>(r.res.depth))};
      }
    }
  }
  return out;
}

inline constexpr std::string_view bench_csv_header =
    "name,ref_style,q,A,gi,cx,u,depth,cex,p_sat,improv_q,improv_cx,improv_u,improv_depth";

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << bench_csv_header << '\n';
  auto fixed = [](double v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
  };
  for (const auto& r : rows) {
    out << r.name << ',' << to_string(r.style) << ',' << r.res.q << ',' << r.aux << ','
        << r.res.gi << ',' << r.res.cx << ',' << r.res.u << ',' << r.res.depth << ','
        << r.cex_count << ',' << (r.p_sat ? fixed(*r.p_sat, 4) : "");
    if (r.improvement) {
      out << ',' << fixed(r.improvement->q, 2) << ',' << fixed(r.improvement->cx, 2) << ','
          << fixed(r.improvement->u, 2) << ',' << fixed(r.improvement->depth, 2);
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qsat
