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
  \file simulator.hpp
  \brief Dense statevector simulation with exact marginals and seeded
         sampling.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qsat/error.hpp"
#include "qsat/qcircuit.hpp"

namespace qsat {

using Amplitude = std::complex<double>;

inline constexpr std::size_t default_qubit_cap = 26;

/// QSAT_QUBIT_CAP when set to a positive integer, otherwise 26.
inline std::size_t qubit_cap_from_env() {
  if (const char* env = std::getenv("QSAT_QUBIT_CAP")) {
    char* end = nullptr;
    auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return default_qubit_cap;
}

struct SimulatorConfig {
  std::size_t qubit_cap = qubit_cap_from_env();
};

class Statevector {
 public:
  /// |index> on `n` qubits.
  explicit Statevector(std::size_t n, std::uint64_t index = 0,
                       const SimulatorConfig& cfg = SimulatorConfig{})
      : n_(n) {
    if (n > cfg.qubit_cap) {
      throw CapacityError(std::to_string(n) + " qubits exceed the simulator cap of " +
                          std::to_string(cfg.qubit_cap) + " (set QSAT_QUBIT_CAP to raise it)");
    }
    if (n >= 63) throw CapacityError("too many qubits");
    if (index >> n) throw InvalidArgument("basis index out of range");
    amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
    amps_[index] = 1.0;
  }

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return amps_.size(); }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }

  double norm_squared() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

  void apply(const QGate& g) {
    if (g.target >= n_) throw InvalidArgument("gate target out of range");
    for (const auto& c : g.controls) {
      if (c.qubit >= n_) throw InvalidArgument("control out of range");
    }
    const std::uint64_t tbit = std::uint64_t{1} << g.target;
    switch (g.kind) {
      case QGateKind::X:
        for_pairs({g.target}, 0, [&](std::uint64_t i) { std::swap(amps_[i], amps_[i | tbit]); });
        break;
      case QGateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        for_pairs({g.target}, 0, [&](std::uint64_t i) {
          auto a = amps_[i], b = amps_[i | tbit];
          amps_[i] = (a + b) * r;
          amps_[i | tbit] = (a - b) * r;
        });
        break;
      }
      case QGateKind::P: {
        const Amplitude phase = std::polar(1.0, g.angle);
        for_pairs({g.target}, 0, [&](std::uint64_t i) { amps_[i | tbit] *= phase; });
        break;
      }
      case QGateKind::CX:
      case QGateKind::MCX: {
        std::vector<std::size_t> fixed{g.target};
        std::uint64_t value = 0;
        for (const auto& c : g.controls) {
          fixed.push_back(c.qubit);
          if (c.positive) value |= std::uint64_t{1} << c.qubit;
        }
        for_pairs(fixed, value, [&](std::uint64_t i) { std::swap(amps_[i], amps_[i | tbit]); });
        break;
      }
    }
  }

  void apply(const QCircuit& qc) {
    if (qc.num_qubits() != n_) throw InvalidArgument("circuit width differs from state");
    for (const auto& g : qc.gates()) apply(g);
  }

 private:
  // Calls f(i) for every index whose `fixed` bits equal `value` (the
  // target, fixed[0], is always 0 in i).
  template <typename F>
  void for_pairs(const std::vector<std::size_t>& fixed, std::uint64_t value, F&& f) {
    const std::uint64_t size = amps_.size();
    if (fixed.size() == 1) {
      const std::uint64_t stride = std::uint64_t{1} << fixed[0];
      for (std::uint64_t base = 0; base < size; base += 2 * stride) {
        for (std::uint64_t j = base; j < base + stride; ++j) f(j);
      }
      return;
    }
    std::uint64_t mask = 0;
    for (auto p : fixed) mask |= std::uint64_t{1} << p;
    // Enumerate the free bits by carrying through the fixed ones.
    for (std::uint64_t i = 0; i < size; i = ((i | mask) + 1) & ~mask) f(i | value);
  }

  std::size_t n_;
  std::vector<Amplitude> amps_;
};

/// Runs `qc` from the basis state |initial>.
inline Statevector run(const QCircuit& qc, std::uint64_t initial = 0,
                       const SimulatorConfig& cfg = SimulatorConfig{}) {
  Statevector sv(qc.num_qubits(), initial, cfg);
  sv.apply(qc);
  return sv;
}

/// Runs `qc` from a basis bitstring whose k-th character is qubit k.
inline Statevector run(const QCircuit& qc, std::string_view initial,
                       const SimulatorConfig& cfg = SimulatorConfig{}) {
  if (initial.size() != qc.num_qubits()) throw InvalidArgument("initial bitstring width mismatch");
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < initial.size(); ++k) {
    if (initial[k] == '1') {
      index |= std::uint64_t{1} << k;
    } else if (initial[k] != '0') {
      throw InvalidArgument("initial bitstring may only contain 0 and 1");
    }
  }
  return run(qc, index, cfg);
}

/// Marginal distribution over `qubits` as a dense array: bit k of the
/// array index is qubits[k].
inline std::vector<double> marginal(const Statevector& sv, const std::vector<Qubit>& qubits) {
  if (qubits.empty()) throw InvalidArgument("empty qubit subset");
  if (qubits.size() >= 63) throw InvalidArgument("qubit subset too large");
  for (auto q : qubits) {
    if (q >= sv.num_qubits()) throw InvalidArgument("qubit out of range");
  }
  std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
  for (std::uint64_t i = 0; i < sv.size(); ++i) {
    const double p = std::norm(sv[i]);
    if (p == 0.0) continue;
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) key |= ((i >> qubits[k]) & 1u) << k;
    dist[key] += p;
  }
  return dist;
}

inline std::string key_to_bitstring(std::uint64_t key, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t k = 0; k < width; ++k) {
    if ((key >> k) & 1u) s[k] = '1';
  }
  return s;
}

/// Outcome bitstring (character k is qubits[k]) -> probability.  Outcomes
/// of exactly zero probability are omitted.
inline std::map<std::string, double> probabilities(const Statevector& sv,
                                                   const std::vector<Qubit>& qubits) {
  auto dist = marginal(sv, qubits);
  std::map<std::string, double> out;
  for (std::uint64_t key = 0; key < dist.size(); ++key) {
    if (dist[key] > 0.0) out.emplace(key_to_bitstring(key, qubits.size()), dist[key]);
  }
  return out;
}

struct MeasurementOutcome {
  std::string bits;
  double probability = 0.0;  ///< exact probability of this outcome
  std::uint64_t counts = 0;  ///< times observed when sampled
};

/// Draws `shots` measurements of `qubits`; identical seeds give identical
/// results.  Returned outcomes are those observed at least once, ordered by
/// bitstring.
inline std::vector<MeasurementOutcome> sample(const Statevector& sv,
                                              const std::vector<Qubit>& qubits,
                                              std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidArgument("shots must be at least 1");
  auto dist = marginal(sv, qubits);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> pick(dist.begin(), dist.end());
  std::map<std::uint64_t, std::uint64_t> hits;
  for (std::uint64_t s = 0; s < shots; ++s) ++hits[pick(rng)];
  std::vector<MeasurementOutcome> out;
  for (auto [key, n] : hits) out.push_back({key_to_bitstring(key, qubits.size()), dist[key], n});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.bits < b.bits; });
  return out;
}

/// Raw amplitudes as little-endian f64 pairs (re, im), index order.
inline void dump(const Statevector& sv, std::ostream& out) {
  auto put = [&](double d) {
    auto bits = std::bit_cast<std::uint64_t>(d);
    char buf[8];
    for (int b = 0; b < 8; ++b) buf[b] = static_cast<char>((bits >> (8 * b)) & 0xffu);
    out.write(buf, 8);
  };
  for (const auto& a : sv.amplitudes()) {
    put(a.real());
    put(a.imag());
  }
}

}  // namespace qsat
