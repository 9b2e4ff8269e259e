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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lspack/boxes.hpp"
#include "lspack/layout.hpp"

namespace lspack {

enum class ViolationKind {
  MISSING_OCCURRENCE,
  CELL_COLLISION,
  BOX_NOT_SINGLE_COLUMN,
  BOX_CHAIN_BROKEN,
  QUBIT_NOT_SINGLE_ROW,
  QUBIT_RUN_BROKEN,
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::MISSING_OCCURRENCE: return "MISSING_OCCURRENCE";
    case ViolationKind::CELL_COLLISION: return "CELL_COLLISION";
    case ViolationKind::BOX_NOT_SINGLE_COLUMN: return "BOX_NOT_SINGLE_COLUMN";
    case ViolationKind::BOX_CHAIN_BROKEN: return "BOX_CHAIN_BROKEN";
    case ViolationKind::QUBIT_NOT_SINGLE_ROW: return "QUBIT_NOT_SINGLE_ROW";
    case ViolationKind::QUBIT_RUN_BROKEN: return "QUBIT_RUN_BROKEN";
  }
  return "UNKNOWN";
}

struct Violation {
  ViolationKind kind;
  std::string details;
};

/// Empty iff the layout is a valid configuration for the box set.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(ViolationKind kind, std::string details) {
    violations.push_back(Violation{kind, std::move(details)});
  }
  bool has(ViolationKind kind) const {
    for (const Violation& v : violations) {
      if (v.kind == kind) return true;
    }
    return false;
  }
};

namespace detail {

// True iff `wanted` occupies consecutive positions of `ordered` (both
// ascending). Consecutiveness in the nonempty order is what chains and runs
// require; interleaved empty cells are fine.
inline bool consecutive_in(const std::vector<int>& ordered,
                           std::vector<int> wanted) {
  if (wanted.size() <= 1) return true;
  std::sort(wanted.begin(), wanted.end());
  auto first = std::find(ordered.begin(), ordered.end(), wanted.front());
  if (first == ordered.end()) return false;
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    auto it = first + static_cast<std::ptrdiff_t>(i);
    if (it == ordered.end() || *it != wanted[i]) return false;
  }
  return true;
}

}  // namespace detail

/// Checks the two validity criteria plus bookkeeping:
///  - every box occurrence is placed exactly once, nothing extra;
///  - at most one patch per cell;
///  - each box's patches share a column and form a vertical-neighbor chain;
///  - each recurring qubit's patches share a row and form a horizontal run.
/// All problems are reported, never thrown.
inline ValidationReport validate(const Layout& l, const BoxSet& b) {
  ValidationReport rep;

  for (const Cell& c : l.collisions()) {
    rep.add(ViolationKind::CELL_COLLISION,
            "more than one patch at " + to_string(c));
  }

  // Occurrence bijection. Members are distinct per box, so (box, qubit)
  // identifies an occurrence.
  std::map<std::pair<BoxId, QubitId>, std::vector<Cell>> placed;
  for (const Patch& p : l.patches()) {
    placed[{p.box, p.qubit}].push_back(p.cell);
  }
  std::map<std::pair<BoxId, QubitId>, Cell> cell_of;
  for (const PatchBox& box : b.boxes()) {
    for (QubitId q : box.members) {
      auto it = placed.find({box.id, q});
      if (it == placed.end()) {
        rep.add(ViolationKind::MISSING_OCCURRENCE,
                "no patch for box " + std::to_string(box.id) + " qubit " +
                    std::to_string(q));
      } else {
        if (it->second.size() > 1) {
          rep.add(ViolationKind::MISSING_OCCURRENCE,
                  "box " + std::to_string(box.id) + " qubit " +
                      std::to_string(q) + " placed " +
                      std::to_string(it->second.size()) + " times");
        }
        cell_of[{box.id, q}] = it->second.front();
        placed.erase(it);
      }
    }
  }
  for (const auto& [key, cells] : placed) {
    rep.add(ViolationKind::MISSING_OCCURRENCE,
            "patch at " + to_string(cells.front()) + " references box " +
                std::to_string(key.first) + " qubit " +
                std::to_string(key.second) +
                " which is not an occurrence of the box set");
  }

  // Criterion 1: each box is one column of vertically consecutive patches.
  for (const PatchBox& box : b.boxes()) {
    std::vector<Cell> cells;
    for (QubitId q : box.members) {
      auto it = cell_of.find({box.id, q});
      if (it != cell_of.end()) cells.push_back(it->second);
    }
    if (cells.size() < 2) continue;
    bool one_col = true;
    for (const Cell& c : cells) {
      if (c.col != cells.front().col) one_col = false;
    }
    if (!one_col) {
      rep.add(ViolationKind::BOX_NOT_SINGLE_COLUMN,
              "box " + std::to_string(box.id) + " spans multiple columns");
      continue;
    }
    std::vector<int> rows;
    rows.reserve(cells.size());
    for (const Cell& c : cells) rows.push_back(c.row);
    if (!detail::consecutive_in(l.column_rows(cells.front().col), rows)) {
      rep.add(ViolationKind::BOX_CHAIN_BROKEN,
              "box " + std::to_string(box.id) +
                  " is interrupted by foreign patches in column " +
                  std::to_string(cells.front().col));
    }
  }

  // Criterion 2: each recurring qubit is one row of horizontally consecutive
  // patches.
  for (const auto& [q, occs] : b.occurrence_index()) {
    if (occs.size() < 2) continue;
    std::vector<Cell> cells;
    for (const Occurrence& o : occs) {
      auto it = cell_of.find({o.box, q});
      if (it != cell_of.end()) cells.push_back(it->second);
    }
    if (cells.size() < 2) continue;
    bool one_row = true;
    for (const Cell& c : cells) {
      if (c.row != cells.front().row) one_row = false;
    }
    if (!one_row) {
      rep.add(ViolationKind::QUBIT_NOT_SINGLE_ROW,
              "qubit " + std::to_string(q) + " occupies multiple rows");
      continue;
    }
    std::vector<int> cols;
    cols.reserve(cells.size());
    for (const Cell& c : cells) cols.push_back(c.col);
    if (!detail::consecutive_in(l.row_cols(cells.front().row), cols)) {
      rep.add(ViolationKind::QUBIT_RUN_BROKEN,
              "qubit " + std::to_string(q) +
                  " run is interrupted by foreign patches in row " +
                  std::to_string(cells.front().row));
    }
  }

  return rep;
}

}  // namespace lspack
