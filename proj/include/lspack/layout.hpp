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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lspack/boxes.hpp"

namespace lspack {

/// One lattice cell. Rows grow downward, columns rightward; coordinates are
/// unbounded integers (only the bounding box matters).
struct Cell {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
}

/// One occupied cell: the occurrence (box, qubit) it carries.
struct Patch {
  Cell cell;
  BoxId box = 0;
  QubitId qubit = 0;

  friend auto operator<=>(const Patch&, const Patch&) = default;
};

enum class VerticalDir { up, down };
enum class HorizontalDir { left, right };

/// Tight bounding box of the nonempty cells.
struct BoundingBox {
  int min_col = 0;
  int max_col = 0;
  int min_row = 0;
  int max_row = 0;

  int width() const { return max_col - min_col + 1; }
  int height() const { return max_row - min_row + 1; }
  long long area() const {
    return static_cast<long long>(width()) * height();
  }

  friend auto operator<=>(const BoundingBox&, const BoundingBox&) = default;
};

/// A sparse 2D arrangement of patches. The patch list is kept in insertion
/// order; per-column and per-row occupancy maps are built on construction.
/// Layouts are value objects and never mutate afterwards, so they are safe
/// to share between threads.
///
/// Two patches on one cell are representable (the second and later ones are
/// recorded as collisions) so that validation can report the problem instead
/// of construction throwing.
class Layout {
 public:
  Layout() = default;

  explicit Layout(std::vector<Patch> patches) : patches_(std::move(patches)) {
    for (std::size_t i = 0; i < patches_.size(); ++i) {
      const Cell& c = patches_[i].cell;
      bool fresh_col = cols_[c.col].try_emplace(c.row, i).second;
      rows_[c.row].try_emplace(c.col, i);
      if (!fresh_col) {
        collisions_.push_back(c);
      }
    }
  }

  const std::vector<Patch>& patches() const { return patches_; }
  bool empty() const { return patches_.empty(); }
  std::size_t size() const { return patches_.size(); }

  /// Cells that carry more than one patch (normally none).
  const std::vector<Cell>& collisions() const { return collisions_; }

  std::optional<Patch> at(Cell c) const {
    auto col = cols_.find(c.col);
    if (col == cols_.end()) return std::nullopt;
    auto cell = col->second.find(c.row);
    if (cell == col->second.end()) return std::nullopt;
    return patches_[cell->second];
  }

  /// The next nonempty patch strictly above/below `c` in its column, skipping
  /// empty cells; absent if there is none. `c` itself need not be occupied.
  std::optional<Patch> vertical_neighbor(Cell c, VerticalDir dir) const {
    auto col = cols_.find(c.col);
    if (col == cols_.end()) return std::nullopt;
    const auto& by_row = col->second;
    if (dir == VerticalDir::down) {
      auto it = by_row.upper_bound(c.row);
      if (it == by_row.end()) return std::nullopt;
      return patches_[it->second];
    }
    auto it = by_row.lower_bound(c.row);
    if (it == by_row.begin()) return std::nullopt;
    return patches_[std::prev(it)->second];
  }

  /// Mirror of vertical_neighbor along the row.
  std::optional<Patch> horizontal_neighbor(Cell c, HorizontalDir dir) const {
    auto row = rows_.find(c.row);
    if (row == rows_.end()) return std::nullopt;
    const auto& by_col = row->second;
    if (dir == HorizontalDir::right) {
      auto it = by_col.upper_bound(c.col);
      if (it == by_col.end()) return std::nullopt;
      return patches_[it->second];
    }
    auto it = by_col.lower_bound(c.col);
    if (it == by_col.begin()) return std::nullopt;
    return patches_[std::prev(it)->second];
  }

  /// Occupied rows of one column, ascending.
  std::vector<int> column_rows(int col) const {
    std::vector<int> out;
    auto it = cols_.find(col);
    if (it == cols_.end()) return out;
    out.reserve(it->second.size());
    for (const auto& [row, _] : it->second) out.push_back(row);
    return out;
  }

  /// Occupied columns of one row, ascending.
  std::vector<int> row_cols(int row) const {
    std::vector<int> out;
    auto it = rows_.find(row);
    if (it == rows_.end()) return out;
    out.reserve(it->second.size());
    for (const auto& [col, _] : it->second) out.push_back(col);
    return out;
  }

  /// Occupied column indices, ascending.
  std::vector<int> used_cols() const {
    std::vector<int> out;
    out.reserve(cols_.size());
    for (const auto& [col, _] : cols_) out.push_back(col);
    return out;
  }

  /// Occupied row indices, ascending.
  std::vector<int> used_rows() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [row, _] : rows_) out.push_back(row);
    return out;
  }

 private:
  std::vector<Patch> patches_;
  std::map<int, std::map<int, std::size_t>> cols_;  // col -> row -> index
  std::map<int, std::map<int, std::size_t>> rows_;  // row -> col -> index
  std::vector<Cell> collisions_;
};

/// Tight bounding box; throws on an empty layout.
inline BoundingBox bounding_box(const Layout& l) {
  if (l.empty()) {
    throw std::invalid_argument("bounding_box of empty layout");
  }
  BoundingBox bb;
  bool first = true;
  for (const Patch& p : l.patches()) {
    if (first) {
      bb = {p.cell.col, p.cell.col, p.cell.row, p.cell.row};
      first = false;
      continue;
    }
    bb.min_col = std::min(bb.min_col, p.cell.col);
    bb.max_col = std::max(bb.max_col, p.cell.col);
    bb.min_row = std::min(bb.min_row, p.cell.row);
    bb.max_row = std::max(bb.max_row, p.cell.row);
  }
  return bb;
}

/// Bounding-box area, with 0 for the empty layout.
inline long long layout_area(const Layout& l) {
  return l.empty() ? 0 : bounding_box(l).area();
}

inline Layout translated(const Layout& l, int dcol, int drow) {
  std::vector<Patch> moved = l.patches();
  for (Patch& p : moved) {
    p.cell.col += dcol;
    p.cell.row += drow;
  }
  return Layout(std::move(moved));
}

/// Removes globally empty rows and columns by remapping coordinates to dense
/// ranks starting at 0. Per-column and per-row nonempty orders are untouched,
/// so validity is preserved while the bounding box can only shrink.
inline Layout compressed(const Layout& l) {
  if (l.empty()) return l;
  std::map<int, int> col_rank;
  std::map<int, int> row_rank;
  for (int c : l.used_cols()) {
    int r = static_cast<int>(col_rank.size());
    col_rank[c] = r;
  }
  for (int r : l.used_rows()) {
    int rank = static_cast<int>(row_rank.size());
    row_rank[r] = rank;
  }
  std::vector<Patch> packed = l.patches();
  for (Patch& p : packed) {
    p.cell.col = col_rank[p.cell.col];
    p.cell.row = row_rank[p.cell.row];
  }
  return Layout(std::move(packed));
}

}  // namespace lspack
