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

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lspack {

/// Index of a logical qubit. Valid ids are < Circuit::qubit_count.
using QubitId = std::uint32_t;

/// Index of a patch box. Box ids equal the gate positions of the merged
/// circuit they come from.
using BoxId = std::int32_t;

/// A (possibly multi-target) CNOT. Targets are pairwise distinct and never
/// contain the control. An empty target list is allowed: it is the degenerate
/// one-patch gate produced when a reduction block has size one.
struct Cnot {
  QubitId control = 0;
  std::vector<QubitId> targets;

  bool operator==(const Cnot&) const = default;
};

/// The initialization/CNOT slice of a circuit: a fixed-size qubit register
/// plus an ordered CNOT list. init/measure/label lines of circuit files are
/// kept as per-qubit annotations so that files round-trip, but they generate
/// no gates and play no role in placement.
struct Circuit {
  std::uint32_t qubit_count = 0;
  std::vector<Cnot> gates;
  std::map<QubitId, std::vector<std::string>> labels;

  /// Throws std::invalid_argument if any gate or label references a qubit
  /// outside the register or a gate has repeated qubits.
  void check() const {
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const Cnot& g = gates[i];
      if (g.control >= qubit_count) {
        throw std::invalid_argument("gate " + std::to_string(i) +
                                    ": control qubit " +
                                    std::to_string(g.control) +
                                    " out of range");
      }
      std::set<QubitId> seen;
      for (QubitId t : g.targets) {
        if (t >= qubit_count) {
          throw std::invalid_argument("gate " + std::to_string(i) +
                                      ": target qubit " + std::to_string(t) +
                                      " out of range");
        }
        if (t == g.control) {
          throw std::invalid_argument("gate " + std::to_string(i) +
                                      ": control appears in targets");
        }
        if (!seen.insert(t).second) {
          throw std::invalid_argument("gate " + std::to_string(i) +
                                      ": duplicate target " +
                                      std::to_string(t));
        }
      }
    }
    for (const auto& [q, _] : labels) {
      if (q >= qubit_count) {
        throw std::invalid_argument("label references qubit " +
                                    std::to_string(q) + " out of range");
      }
    }
  }
};

/// Merges all CNOTs with the same control into one multi-target CNOT.
///
/// The output has exactly one gate per distinct control, in first-occurrence
/// order; its target list is the union of all targets of that control, also
/// in first-occurrence order. Duplicate targets of one control collapse (a
/// doubled CNOT is the identity). Idempotent.
inline Circuit merge_cnots(const Circuit& c) {
  Circuit out;
  out.qubit_count = c.qubit_count;
  out.labels = c.labels;
  std::map<QubitId, std::size_t> slot;
  for (const Cnot& g : c.gates) {
    auto [it, fresh] = slot.try_emplace(g.control, out.gates.size());
    if (fresh) {
      out.gates.push_back(Cnot{g.control, {}});
    }
    Cnot& merged = out.gates[it->second];
    for (QubitId t : g.targets) {
      bool present = false;
      for (QubitId u : merged.targets) {
        if (u == t) {
          present = true;
          break;
        }
      }
      if (!present) {
        merged.targets.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace lspack
