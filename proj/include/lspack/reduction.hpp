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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lspack/bounds.hpp"
#include "lspack/boxes.hpp"
#include "lspack/circuit.hpp"
#include "lspack/exact.hpp"
#include "lspack/layout.hpp"

namespace lspack {

/// A 3-partition instance: 3s positive integers that should split into s
/// groups summing to L each. With strict_bounds every value lies in
/// [L/4, L/3], which forces all groups to have exactly three elements.
struct ThreePartitionInstance {
  std::uint32_t s = 0;
  std::uint32_t L = 0;
  std::vector<std::uint32_t> values;
  bool strict_bounds = true;
};

/// A solution: s disjoint 1-based index sets covering 1..3s.
struct Partition {
  std::vector<std::vector<std::uint32_t>> sets;
};

struct InstanceReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

inline InstanceReport validate_instance(const ThreePartitionInstance& inst) {
  InstanceReport rep;
  if (inst.s == 0) rep.problems.push_back("s must be positive");
  if (inst.L == 0) rep.problems.push_back("L must be positive");
  if (inst.values.size() != static_cast<std::size_t>(3) * inst.s) {
    rep.problems.push_back("expected " + std::to_string(3 * inst.s) +
                           " values, got " +
                           std::to_string(inst.values.size()));
    return rep;
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    const std::uint32_t a = inst.values[i];
    if (a == 0) {
      rep.problems.push_back("value " + std::to_string(i + 1) +
                             " must be positive");
    }
    if (inst.strict_bounds) {
      if (4ull * a < inst.L) {
        rep.problems.push_back("value " + std::to_string(i + 1) + " = " +
                               std::to_string(a) + " is below L/4");
      }
      if (3ull * a > inst.L) {
        rep.problems.push_back("value " + std::to_string(i + 1) + " = " +
                               std::to_string(a) + " is above L/3");
      }
    }
    sum += a;
  }
  if (sum != static_cast<std::uint64_t>(inst.s) * inst.L) {
    rep.problems.push_back("values sum to " + std::to_string(sum) +
                           ", expected s*L = " +
                           std::to_string(static_cast<std::uint64_t>(inst.s) *
                                          inst.L));
  }
  return rep;
}

/// The gadget circuit an instance maps to, with the roles of its boxes.
/// Box ids: 0..3s-1 encode the values, 3s..4s-1 are the width chain, 4s is
/// the height box. Qubits: 0 is the height control, 1..s the chain controls,
/// s+1 the link qubit shared by chain and height box, s+2..s+L+1 the height
/// fillers, and the value blocks take the remaining s*L fresh qubits.
struct GadgetCircuit {
  Circuit circuit;
  std::vector<BoxId> part_a_boxes;
  std::vector<BoxId> width_boxes;
  BoxId height_box = 0;
  BoundingBox compute_area;  // nominal s columns x L rows
};

/// Encodes an instance as a circuit whose placement problem reaches the
/// theoretical optimum exactly when the instance is solvable.
///
/// Value i becomes one CNOT over a_i fresh qubits, so its box is a column
/// block of height a_i with no other constraint. The width chain (s CNOTs
/// with distinct controls, one shared target) forces s+1 distinct columns;
/// the height box (one CNOT with L+1 targets, the first being this shared
/// link qubit) forces a column of L+2 patches. An optimal placement then is
/// exactly s+1 columns of L+2 rows with the value blocks partitioned into
/// the s chain columns, L patches each.
inline GadgetCircuit instance_to_circuit(const ThreePartitionInstance& inst) {
  const InstanceReport rep = validate_instance(inst);
  if (!rep.ok()) {
    std::string msg = "invalid 3-partition instance:";
    for (const std::string& p : rep.problems) msg += " " + p + ";";
    throw std::invalid_argument(msg);
  }
  const std::uint32_t s = inst.s;
  const std::uint32_t L = inst.L;

  GadgetCircuit g;
  g.circuit.qubit_count = s * (L + 1) + L + 2;
  const QubitId height_control = 0;
  const QubitId link = s + 1;
  const QubitId fillers_base = s + 2;
  QubitId fresh = s + L + 2;

  for (std::uint32_t i = 0; i < 3 * s; ++i) {
    Cnot gate;
    gate.control = fresh++;
    for (std::uint32_t k = 1; k < inst.values[i]; ++k) {
      gate.targets.push_back(fresh++);
    }
    g.part_a_boxes.push_back(static_cast<BoxId>(g.circuit.gates.size()));
    g.circuit.gates.push_back(std::move(gate));
  }
  for (std::uint32_t j = 0; j < s; ++j) {
    Cnot gate;
    gate.control = 1 + j;
    gate.targets.push_back(link);
    g.width_boxes.push_back(static_cast<BoxId>(g.circuit.gates.size()));
    g.circuit.gates.push_back(std::move(gate));
  }
  Cnot height;
  height.control = height_control;
  height.targets.push_back(link);
  for (std::uint32_t k = 0; k < L; ++k) {
    height.targets.push_back(fillers_base + k);
  }
  g.height_box = static_cast<BoxId>(g.circuit.gates.size());
  g.circuit.gates.push_back(std::move(height));

  g.circuit.labels[link].push_back("link");
  g.circuit.check();
  g.compute_area = BoundingBox{0, static_cast<int>(s) - 1, 0,
                               static_cast<int>(L) - 1};
  return g;
}

namespace detail {

// Canonical enumeration of partitions into s groups summing to L each.
// Values are processed largest first. Groups with identical (sum, size) are
// interchangeable containers for everything still to come, so only the first
// of them is tried; this also makes the very first empty group the only
// entry point for opening a new set, giving each unordered partition one
// canonical visit. With triples_only every group is capped at three
// elements.
inline bool partition_dfs(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& vals,
                          std::size_t next, std::uint32_t target,
                          bool triples_only,
                          std::vector<std::vector<std::uint32_t>>& groups,
                          std::vector<std::uint32_t>& sums) {
  if (next == vals.size()) {
    for (std::uint32_t sum : sums) {
      if (sum != target) return false;
    }
    return true;
  }
  const auto [value, index] = vals[next];
  std::vector<std::pair<std::uint32_t, std::size_t>> tried;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    if (sums[gi] + value > target) continue;
    if (triples_only && groups[gi].size() == 3) continue;
    const std::pair<std::uint32_t, std::size_t> key{sums[gi],
                                                    groups[gi].size()};
    if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
    tried.push_back(key);
    groups[gi].push_back(index);
    sums[gi] += value;
    if (partition_dfs(vals, next + 1, target, triples_only, groups, sums)) {
      return true;
    }
    sums[gi] -= value;
    groups[gi].pop_back();
  }
  return false;
}

}  // namespace detail

/// Exhaustive 3-partition oracle. Strict instances are split into unordered
/// triples; relaxed ones into s groups of any size, each summing to L.
/// Guarded to 3s <= max_elements values.
inline std::optional<Partition> brute_force_partition(
    const ThreePartitionInstance& inst, std::size_t max_elements = 15) {
  const InstanceReport rep = validate_instance(inst);
  if (!rep.ok()) {
    throw std::invalid_argument("brute_force_partition: invalid instance");
  }
  if (inst.values.size() > max_elements) {
    throw std::invalid_argument("brute_force_partition: instance has " +
                                std::to_string(inst.values.size()) +
                                " values, guard allows " +
                                std::to_string(max_elements));
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> vals;
  for (std::uint32_t i = 0; i < inst.values.size(); ++i) {
    vals.push_back({inst.values[i], i + 1});
  }
  std::stable_sort(vals.begin(), vals.end(),
                   [](const auto& lhs, const auto& rhs) {
                     return lhs.first > rhs.first;
                   });

  std::vector<std::vector<std::uint32_t>> groups(inst.s);
  std::vector<std::uint32_t> sums(inst.s, 0);
  if (!detail::partition_dfs(vals, 0, inst.L, inst.strict_bounds, groups,
                             sums)) {
    return std::nullopt;
  }
  Partition part;
  part.sets = std::move(groups);
  for (auto& set : part.sets) std::sort(set.begin(), set.end());
  std::sort(part.sets.begin(), part.sets.end());
  return part;
}

enum class Decision { yes, no, unknown };

inline std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::unknown: return "unknown";
  }
  return "unknown";
}

/// Decides an instance through placement: builds the gadget, solves it
/// exactly and reports whether the theoretical optimum was reached. A layout
/// meeting the occurrence-count bound proves "yes" even without a completed
/// search; "no" requires the search to have finished. Budget exhaustion
/// without either is an explicit unknown, never a silent boolean.
inline Decision decide_via_placement(const ThreePartitionInstance& inst,
                                     const SolverBudget& budget = {}) {
  const GadgetCircuit g = instance_to_circuit(inst);
  const BoxSet boxes = to_boxes(g.circuit);
  const long long bound = static_cast<long long>(optimal_patch_count(boxes));
  const SolveResult res = solve_exact(boxes, budget);
  if (res.area == bound) return Decision::yes;
  if (res.proven_optimal) return Decision::no;
  return Decision::unknown;
}

/// Reads the partition back out of a theoretically optimal gadget layout:
/// the value blocks of each chain column form one set. Requires optimality
/// and a clean column structure.
inline Partition partition_from_layout(const Layout& l,
                                       const GadgetCircuit& g) {
  const BoxSet boxes = to_boxes(g.circuit);
  if (!is_theoretically_optimal(l, boxes)) {
    throw std::invalid_argument(
        "partition_from_layout: layout is not theoretically optimal");
  }
  std::map<BoxId, int> col_of_box;
  for (const Patch& p : l.patches()) col_of_box[p.box] = p.cell.col;

  std::map<int, std::vector<std::uint32_t>> value_cols;
  for (std::size_t i = 0; i < g.part_a_boxes.size(); ++i) {
    value_cols[col_of_box[g.part_a_boxes[i]]].push_back(
        static_cast<std::uint32_t>(i + 1));
  }
  const int height_col = col_of_box[g.height_box];
  if (value_cols.count(height_col) > 0) {
    throw std::invalid_argument(
        "partition_from_layout: value blocks share the height column");
  }
  std::map<int, int> chain_cols;
  for (BoxId cb : g.width_boxes) chain_cols[col_of_box[cb]]++;

  Partition part;
  for (const auto& [col, indices] : value_cols) {
    if (chain_cols.count(col) == 0 || chain_cols[col] != 1) {
      throw std::invalid_argument(
          "partition_from_layout: value column " + std::to_string(col) +
          " does not pair with exactly one chain box");
    }
    part.sets.push_back(indices);
  }
  if (part.sets.size() != g.width_boxes.size()) {
    throw std::invalid_argument(
        "partition_from_layout: expected one value set per chain column");
  }
  return part;
}

}  // namespace lspack
