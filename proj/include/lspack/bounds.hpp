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

#include <stdexcept>
#include <string>
#include <vector>

#include "lspack/boxes.hpp"
#include "lspack/layout.hpp"
#include "lspack/validate.hpp"

namespace lspack {

/// Patch count of a placement with no empty cell inside the bounding box:
/// one patch per occurrence, i.e. per gate its target count plus one.
/// This is a lower bound on the area of every valid layout.
inline std::size_t optimal_patch_count(const BoxSet& b) {
  return b.total_occurrences();
}

/// Patch requirement of the fully row-separated fallback placement: the
/// circuit qubit count times the number of boxes. Upper bound for
/// canonical_row_placement.
inline std::size_t worst_case_patch_count(const BoxSet& b,
                                          std::uint32_t n_qubits) {
  if (!b.empty() && n_qubits <= b.max_qubit()) {
    throw std::invalid_argument(
        "worst_case_patch_count: qubit register smaller than referenced ids");
  }
  return static_cast<std::size_t>(n_qubits) * b.boxes().size();
}

/// The universal fallback layout: box i occupies column i, qubit q always
/// sits in row q. Every row is exclusive to one qubit, so recurring qubits
/// form whole-row runs and the result is valid for every box set.
inline Layout canonical_row_placement(const BoxSet& b,
                                      std::uint32_t n_qubits) {
  std::vector<Patch> patches;
  patches.reserve(b.total_occurrences());
  for (const PatchBox& box : b.boxes()) {
    for (QubitId q : box.members) {
      if (q >= n_qubits) {
        throw std::invalid_argument("canonical_row_placement: qubit " +
                                    std::to_string(q) +
                                    " outside register of size " +
                                    std::to_string(n_qubits));
      }
      patches.push_back(
          Patch{Cell{box.id, static_cast<int>(q)}, box.id, q});
    }
  }
  return Layout(std::move(patches));
}

/// A layout is theoretically optimal when it is valid and its bounding box
/// has no empty cell, i.e. area equals the occurrence count.
inline bool is_theoretically_optimal(const Layout& l, const BoxSet& b) {
  if (!validate(l, b).ok()) return false;
  if (l.empty()) return b.empty();
  return bounding_box(l).area() ==
         static_cast<long long>(optimal_patch_count(b));
}

}  // namespace lspack
