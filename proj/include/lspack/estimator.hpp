// Copyright 2026 The lspack Authors
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

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

#include "lspack/bounds.hpp"
#include "lspack/boxes.hpp"
#include "lspack/circuit.hpp"

namespace lspack {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Number of ways to assign 3N labeled elements to N sets of three.
struct ConfigCount {
  std::uint32_t n_sets = 0;
  BigInt count = 0;
};

/// (3N)! / (3!)^N, exactly. With labeled_sets = false the result is divided
/// by N! so that set order does not count.
inline ConfigCount config_count(std::uint32_t n, bool labeled_sets = true) {
  if (n == 0) {
    throw std::invalid_argument("config_count: N must be positive");
  }
  BigInt count = 1;
  for (std::uint32_t k = 2; k <= 3 * n; ++k) count *= k;
  for (std::uint32_t k = 0; k < n; ++k) count /= 6;
  if (!labeled_sets) {
    for (std::uint32_t k = 2; k <= n; ++k) count /= k;
  }
  return ConfigCount{n, count};
}

/// Wall time to enumerate `count` configurations at `rate_hz` checks per
/// second. Exact division in extended precision, so it stays meaningful far
/// beyond double range.
inline BigFloat estimate_enumeration_time(const ConfigCount& count,
                                          double rate_hz) {
  if (rate_hz <= 0.0) {
    throw std::invalid_argument("estimate_enumeration_time: rate must be positive");
  }
  return BigFloat(count.count) / BigFloat(rate_hz);
}

/// Resource summary for one circuit: tight bound, worst case, their ratio.
struct ResourceReport {
  std::uint32_t n_qubits = 0;
  std::size_t optimal_patches = 0;    // occurrence-count bound of the boxes
  std::size_t injection_patches = 0;  // extra patches supplied additively
  std::size_t total_optimal = 0;
  std::size_t worst_case_patches = 0;
  double ratio = 0.0;
};

/// The two-round Y-state distillation circuit used as a case study: seven
/// first-round distillations plus one second-round, eight qubits each, four
/// three-target CNOTs per unit, and one injection qubit per S-gate (seven per
/// first-round unit). Only the counts matter for placement, so the four
/// CNOTs use a fixed ring wiring over the unit's eight qubits.
inline Circuit distillation_circuit(std::uint32_t first_round_units = 7,
                                    std::uint32_t second_round_units = 1,
                                    std::uint32_t injections_per_unit = 7) {
  const std::uint32_t units = first_round_units + second_round_units;
  const std::uint32_t qubits_per_unit = 8;
  const std::uint32_t cnot_qubits = units * qubits_per_unit;
  const std::uint32_t injections = first_round_units * injections_per_unit;

  Circuit c;
  c.qubit_count = cnot_qubits + injections;
  for (std::uint32_t u = 0; u < units; ++u) {
    const QubitId base = u * qubits_per_unit;
    for (std::uint32_t k = 0; k < 4; ++k) {
      Cnot gate;
      gate.control = base + 2 * k;
      gate.targets = {base + (2 * k + 1) % qubits_per_unit,
                      base + (2 * k + 2) % qubits_per_unit,
                      base + (2 * k + 3) % qubits_per_unit};
      c.gates.push_back(std::move(gate));
    }
  }
  for (std::uint32_t q = cnot_qubits; q < c.qubit_count; ++q) {
    c.labels[q].push_back("injection");
  }
  c.check();
  return c;
}

/// Builds the distillation circuit and reports its resource numbers through
/// the placement calculators; nothing here is a hand-coded result.
inline ResourceReport distillation_case_study() {
  const std::uint32_t first_round = 7;
  const std::uint32_t injections_per_unit = 7;
  const Circuit c = distillation_circuit(first_round, 1, injections_per_unit);
  const BoxSet boxes = to_boxes(c);

  ResourceReport rep;
  rep.n_qubits = c.qubit_count;
  rep.optimal_patches = optimal_patch_count(boxes);
  rep.injection_patches = first_round * injections_per_unit;
  rep.total_optimal = rep.optimal_patches + rep.injection_patches;
  rep.worst_case_patches = worst_case_patch_count(boxes, c.qubit_count);
  rep.ratio = static_cast<double>(rep.worst_case_patches) /
              static_cast<double>(rep.total_optimal);
  return rep;
}

}  // namespace lspack
