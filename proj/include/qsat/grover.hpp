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
  \file grover.hpp
  \brief Grover-search driver: iteration count, the qSAT pipeline and
         SAT/UNSAT adjudication.
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsat/clause_gen.hpp"
#include "qsat/error.hpp"
#include "qsat/oracle.hpp"
#include "qsat/qcircuit.hpp"
#include "qsat/simulator.hpp"

namespace qsat {

/// round(sqrt(2^n / m) / 2), at least 1.
inline std::uint64_t grover_iterations(std::size_t n, std::uint64_t m) {
  if (n >= 63) throw InvalidArgument("search space too large");
  const auto space = std::uint64_t{1} << n;
  if (m < 1 || m > space) {
    throw InvalidArgument("marked count " + std::to_string(m) + " outside [1, 2^" +
                          std::to_string(n) + "]");
  }
  const double gi = 0.5 * std::sqrt(static_cast<double>(space) / static_cast<double>(m));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(gi)));
}

/// Probability of the marked subspace after `gi` iterations from the
/// uniform superposition: sin^2((2 gi + 1) asin(sqrt(m / 2^n))).
inline double analytic_success(std::size_t n, std::uint64_t m, std::uint64_t gi) {
  const auto space = std::ldexp(1.0, static_cast<int>(n));
  if (m < 1 || static_cast<double>(m) > space) throw InvalidArgument("marked count out of range");
  const double theta = std::asin(std::sqrt(static_cast<double>(m) / space));
  const double s = std::sin((2.0 * static_cast<double>(gi) + 1.0) * theta);
  return s * s;
}

/// Probabilities below this count as zero in exhaustive mode.
inline constexpr double exact_zero = 1e-12;

struct QsatConfig {
  std::optional<std::uint64_t> cex_count_hint;  ///< m of the unaltered miter
  std::uint64_t shots = 4096;
  std::uint64_t seed = 7;
  bool exhaustive = true;  ///< exact probabilities instead of sampling
  std::vector<CexRecord> exclusions;
  SimulatorConfig sim{};
};

enum class Verdict { sat, unsat };

inline std::string_view to_string(Verdict v) { return v == Verdict::sat ? "SAT" : "UNSAT"; }

struct CexObservation {
  CexRecord record;
  double frequency = 0.0;  ///< probability (exhaustive) or shot fraction
  bool confirmed = false;  ///< y = 1 and not an excluded assignment
};

struct QsatResult {
  Verdict verdict = Verdict::unsat;
  bool inconclusive = false;  ///< shot-mode UNSAT: no CEX seen in N shots
  std::vector<CexObservation> cexs;
  double p_sat = 0.0;
  std::uint64_t gi = 0;
  std::uint64_t marked = 0;  ///< m' used for the iteration count
  std::size_t n = 0;         ///< |X| + |A|
  bool exhaustive = true;
  std::vector<std::string> warnings;
};

/// States of one qSAT execution.
struct GroverRun {
  ClauseNetwork oracle;    ///< F-hat used for phase marking
  std::uint64_t marked = 0;
  std::uint64_t gi = 0;
  Statevector amplified;   ///< after the GI iterations
  Statevector final_state; ///< after y reset and the final V_F
  std::vector<std::string> warnings;
};

/// Builds F-hat from `cn` plus `cfg.exclusions`, derives m' from the hint,
/// and simulates the pipeline.  m' = 0 runs no iterations.
inline GroverRun run_grover(const ClauseNetwork& cn, const QsatConfig& cfg) {
  if (!cfg.cex_count_hint) throw InvalidArgument("CEX count hint (m) is required");
  const auto verify = cn.without_exclusions();

  std::vector<std::string> warnings;
  auto oracle = cn;
  for (const auto& ex : cfg.exclusions) oracle = exclude_cex(oracle, ex);

  // Every exclusion that is a genuine CEX of F removes a marked state;
  // any other (consistent) assignment adds one.
  std::int64_t marked = static_cast<std::int64_t>(*cfg.cex_count_hint);
  for (const auto& ex : oracle.exclusions()) {
    if (check_cex(verify, ex)) {
      --marked;
    } else {
      ++marked;
      warnings.push_back("excluded assignment " + ex.to_bitstring() + " is not a CEX");
    }
  }
  if (marked < 0) throw InvalidArgument("more CEXs excluded than the hint allows");

  const auto n = cn.num_vars();
  const std::uint64_t gi =
      marked == 0 ? 0 : grover_iterations(n, static_cast<std::uint64_t>(marked));
  auto stages = build_qsat_stages(oracle, verify);

  Statevector sv(stages.prepare.num_qubits(), 0, cfg.sim);
  sv.apply(stages.prepare);
  for (std::uint64_t i = 0; i < gi; ++i) sv.apply(stages.iteration);
  auto amplified = sv;
  sv.apply(stages.finish);
  return {std::move(oracle), static_cast<std::uint64_t>(marked), gi, std::move(amplified),
          std::move(sv), std::move(warnings)};
}

/// Full pipeline.  The answer qubit is read after the unaltered V_F; a
/// y = 1 outcome is a confirmed CEX unless it is one of the exclusions
/// (those are known already and V_F still flags them).
inline QsatResult solve_excluding(const ClauseNetwork& cn, const QsatConfig& cfg) {
  auto run = run_grover(cn, cfg);
  const auto lay = layout_of(cn);
  auto measured = lay.search_qubits();
  measured.push_back(lay.answer());
  const auto width = lay.num_search();

  QsatResult result;
  result.gi = run.gi;
  result.marked = run.marked;
  result.n = width;
  result.exhaustive = cfg.exhaustive;
  result.warnings = std::move(run.warnings);

  const auto& excluded = run.oracle.exclusions();
  auto observe = [&](const std::string& bits, double freq) {
    if (bits.back() != '1') return;
    auto rec = CexRecord::from_bitstring(std::string_view(bits).substr(0, width));
    bool known = std::find(excluded.begin(), excluded.end(), rec) != excluded.end();
    result.cexs.push_back({std::move(rec), freq, !known});
    if (!known) result.p_sat += freq;
  };

  if (cfg.exhaustive) {
    auto dist = marginal(run.final_state, measured);
    for (std::uint64_t key = 0; key < dist.size(); ++key) {
      if (dist[key] > exact_zero) observe(key_to_bitstring(key, measured.size()), dist[key]);
    }
  } else {
    for (const auto& o : sample(run.final_state, measured, cfg.shots, cfg.seed)) {
      observe(o.bits, static_cast<double>(o.counts) / static_cast<double>(cfg.shots));
    }
  }
  std::sort(result.cexs.begin(), result.cexs.end(),
            [](const auto& a, const auto& b) { return a.record < b.record; });
  const bool any = std::any_of(result.cexs.begin(), result.cexs.end(),
                               [](const auto& c) { return c.confirmed; });
  result.verdict = any ? Verdict::sat : Verdict::unsat;
  result.inconclusive = !any && !cfg.exhaustive;
  result.p_sat = std::clamp(result.p_sat, 0.0, 1.0);
  return result;
}

/// Same pipeline; exclusions may be stored in `cn`, listed in `cfg`, or both.
inline QsatResult solve(const ClauseNetwork& cn, const QsatConfig& cfg) {
  return solve_excluding(cn, cfg);
}

}  // namespace qsat
