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
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lspack/bounds.hpp"
#include "lspack/boxes.hpp"
#include "lspack/layout.hpp"
#include "lspack/solver.hpp"

namespace lspack {
namespace detail {

// Decides whether all boxes admit a valid layout inside a fixed
// width x height frame, and materializes one if so.
//
// The search walks columns left to right. Within a column it alternately
// appends one more box (branching over which box, over the rows of shared
// qubits that appear here for the first time, and packing unconstrained
// members into the earliest admissible rows) or closes the column and moves
// right. Branches are cut when
//  - the wasted cells across closed columns exceed the frame's slack,
//  - the remaining boxes cannot cover the remaining columns or exceed their
//    capacity,
//  - a recurring qubit has more placements pending than columns left.
//
// Recurring-qubit semantics drive the row bookkeeping: once a qubit's first
// patch fixes its row, that row is reserved until its last patch is placed --
// later columns may put only that very qubit there, which is exactly the
// horizontal-run criterion. Pending placements in the same column are
// impossible (two patches of one column cannot share a row), which the pin
// cursor check catches for free.
//
// Free members never influence later columns, so they are packed canonically
// instead of branched: any solution using other free rows maps to one the
// search visits. Two safe symmetry rules keep equivalent layouts out of the
// tree: boxes of equal size and identical shared-member sets enter in id
// order, and adjacent chain-order of constraint-free boxes is forced
// ascending (for fully disjoint box sets the first box of every column is
// additionally forced to the smallest unplaced id, which makes the column
// enumeration a canonical set-partition walk).
class FrameSearch {
 public:
  FrameSearch(const BoxSet& b, const SharedIndex& idx,
              const SolverBudget& budget, SteadyClock::time_point start)
      : b_(b),
        idx_(idx),
        n_boxes_(static_cast<int>(b.boxes().size())),
        max_nodes_(budget.max_nodes),
        max_seconds_(budget.max_seconds),
        start_(start) {
    // Boxes with the same size and the same shared members are
    // interchangeable; chain them by id.
    struct Sig {
      int size;
      std::vector<int> shared;
      int box;
    };
    std::vector<Sig> sigs;
    for (int i = 0; i < n_boxes_; ++i) {
      std::vector<int> shared = idx_.box_shared[i];
      std::sort(shared.begin(), shared.end());
      sigs.push_back(Sig{idx_.box_size[i], std::move(shared), i});
    }
    std::sort(sigs.begin(), sigs.end(), [](const Sig& lhs, const Sig& rhs) {
      if (lhs.size != rhs.size) return lhs.size < rhs.size;
      if (lhs.shared != rhs.shared) return lhs.shared < rhs.shared;
      return lhs.box < rhs.box;
    });
    prev_equiv_.assign(n_boxes_, -1);
    for (std::size_t k = 1; k < sigs.size(); ++k) {
      if (sigs[k].size == sigs[k - 1].size &&
          sigs[k].shared == sigs[k - 1].shared) {
        prev_equiv_[sigs[k].box] = sigs[k - 1].box;
      }
    }
  }

  /// True when every box fits a `width` x `height` frame with all `width`
  /// columns in use; `*out` then holds the patches. Smaller effective widths
  /// are covered by smaller frames of the enclosing enumeration.
  bool run(int width, int height, std::vector<Patch>* out) {
    if (out_of_budget_) return false;
    W_ = width;
    H_ = height;
    slack_ = static_cast<long long>(W_) * H_ -
             static_cast<long long>(b_.total_occurrences());
    if (slack_ < 0) return false;
    if (n_boxes_ < W_) return false;
    if (idx_.max_occurrences > W_) return false;
    for (int s : idx_.box_size) {
      if (s > H_) return false;
    }
    used_slack_ = 0;
    placed_.assign(n_boxes_, 0);
    unplaced_count_ = n_boxes_;
    unplaced_size_ = static_cast<long long>(b_.total_occurrences());
    pin_row_.assign(idx_.count(), -1);
    pending_ = idx_.occurrences;
    reserved_.assign(H_, -1);
    acc_.clear();
    out_ = out;
    return place_columns(0);
  }

  bool out_of_budget() const { return out_of_budget_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool tick() {
    if (out_of_budget_) return false;
    ++nodes_;
    if (nodes_ > max_nodes_ ||
        ((nodes_ & 0x1fff) == 0 && seconds_since(start_) > max_seconds_)) {
      out_of_budget_ = true;
      return false;
    }
    return true;
  }

  bool place_columns(int col) {
    if (unplaced_count_ == 0) {
      if (col != W_) return false;
      *out_ = acc_;
      return true;
    }
    if (col == W_) return false;
    const int cols_left = W_ - col;
    if (unplaced_count_ < cols_left) return false;
    const long long cells_left = static_cast<long long>(cols_left) * H_;
    if (unplaced_size_ > cells_left) return false;
    if (cells_left - unplaced_size_ > slack_ - used_slack_) return false;
    for (std::size_t r = 0; r < pending_.size(); ++r) {
      if (pending_[r] > cols_left) return false;
    }
    return extend_column(col, 0, 0, -1);
  }

  bool extend_column(int col, int cursor, int count, int last_pinless) {
    if (!tick()) return false;
    const bool no_shared = idx_.count() == 0;
    for (int i = 0; i < n_boxes_; ++i) {
      if (placed_[i]) continue;
      if (prev_equiv_[i] >= 0 && !placed_[prev_equiv_[i]]) continue;
      const bool pinless = idx_.box_shared[i].empty();
      if (pinless && last_pinless >= 0 && i < last_pinless) continue;
      if (count + idx_.box_size[i] > H_) continue;
      if (try_box(col, cursor, count, i)) return true;
      if (out_of_budget_) return false;
      if (no_shared && count == 0) break;
    }
    if (count > 0) {
      const long long waste = H_ - count;
      if (used_slack_ + waste <= slack_) {
        used_slack_ += waste;
        if (place_columns(col + 1)) return true;
        used_slack_ -= waste;
      }
    }
    return false;
  }

  bool try_box(int col, int cursor, int count, int box) {
    std::vector<std::pair<int, int>> pins;  // (rank, row)
    std::vector<int> new_ranks;
    for (int r : idx_.box_shared[box]) {
      if (pin_row_[r] >= 0) {
        if (pin_row_[r] < cursor) return false;
        pins.push_back({r, pin_row_[r]});
      } else {
        new_ranks.push_back(r);
      }
    }
    return choose_pins(col, cursor, count, box, pins, new_ranks, 0);
  }

  bool choose_pins(int col, int cursor, int count, int box,
                   std::vector<std::pair<int, int>>& pins,
                   const std::vector<int>& new_ranks, std::size_t next) {
    if (next == new_ranks.size()) {
      return commit(col, cursor, count, box, pins);
    }
    for (int row = cursor; row < H_; ++row) {
      if (reserved_[row] >= 0) continue;
      bool clash = false;
      for (const auto& [_, used] : pins) {
        if (used == row) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      if (!tick()) return false;
      pins.push_back({new_ranks[next], row});
      if (choose_pins(col, cursor, count, box, pins, new_ranks, next + 1)) {
        return true;
      }
      pins.pop_back();
      if (out_of_budget_) return false;
    }
    return false;
  }

  bool commit(int col, int cursor, int count, int box,
              const std::vector<std::pair<int, int>>& pins) {
    if (!tick()) return false;
    const PatchBox& pb = b_.boxes()[box];
    const int size = idx_.box_size[box];
    const int free_count = size - static_cast<int>(pins.size());

    auto is_pin_row = [&pins](int row) {
      for (const auto& [_, used] : pins) {
        if (used == row) return true;
      }
      return false;
    };

    std::vector<int> frees;
    frees.reserve(free_count);
    for (int row = cursor; row < H_ && static_cast<int>(frees.size()) < free_count;
         ++row) {
      if (reserved_[row] < 0 && !is_pin_row(row)) frees.push_back(row);
    }
    if (static_cast<int>(frees.size()) < free_count) return false;

    int block_max = frees.empty() ? -1 : frees.back();
    for (const auto& [_, row] : pins) block_max = std::max(block_max, row);

    // Materialize the block: shared members on their pins, free members on
    // the packed rows in member order.
    const std::size_t acc_base = acc_.size();
    std::size_t next_free = 0;
    std::size_t next_shared = 0;
    for (QubitId q : pb.members) {
      int row;
      if (b_.occurrence_count(q) >= 2) {
        const int rank = idx_.box_shared[box][next_shared++];
        row = -1;
        for (const auto& [r, pinned_row] : pins) {
          if (r == rank) {
            row = pinned_row;
            break;
          }
        }
      } else {
        row = frees[next_free++];
      }
      acc_.push_back(Patch{Cell{col, row}, pb.id, q});
    }

    std::vector<int> opened;
    std::vector<int> closed;
    for (int r : idx_.box_shared[box]) {
      if (pin_row_[r] < 0) {
        for (const auto& [rank, row] : pins) {
          if (rank == r) {
            pin_row_[r] = row;
            reserved_[row] = r;
            break;
          }
        }
        opened.push_back(r);
      }
      if (--pending_[r] == 0) {
        reserved_[pin_row_[r]] = -1;
        closed.push_back(r);
      }
    }
    placed_[box] = 1;
    --unplaced_count_;
    unplaced_size_ -= size;

    const bool pinless = idx_.box_shared[box].empty();
    if (extend_column(col, block_max + 1, count + size, pinless ? box : -1)) {
      return true;
    }

    placed_[box] = 0;
    ++unplaced_count_;
    unplaced_size_ += size;
    for (int r : closed) reserved_[pin_row_[r]] = r;
    for (int r : idx_.box_shared[box]) ++pending_[r];
    for (int r : opened) {
      reserved_[pin_row_[r]] = -1;
      pin_row_[r] = -1;
    }
    acc_.resize(acc_base);
    return false;
  }

  const BoxSet& b_;
  const SharedIndex& idx_;
  const int n_boxes_;
  std::vector<int> prev_equiv_;

  int W_ = 0;
  int H_ = 0;
  long long slack_ = 0;
  long long used_slack_ = 0;
  std::vector<char> placed_;
  int unplaced_count_ = 0;
  long long unplaced_size_ = 0;
  std::vector<int> pin_row_;
  std::vector<int> pending_;
  std::vector<int> reserved_;
  std::vector<Patch> acc_;
  std::vector<Patch>* out_ = nullptr;

  std::uint64_t nodes_ = 0;
  const std::uint64_t max_nodes_;
  const double max_seconds_;
  const SteadyClock::time_point start_;
  bool out_of_budget_ = false;
};

}  // namespace detail

/// Minimum-area placement by exhaustive search.
///
/// Candidate bounding boxes are enumerated in increasing area, starting at
/// the occurrence-count lower bound and stopping below the greedy incumbent;
/// each frame is decided by detail::FrameSearch. The first feasible frame
/// therefore yields the global minimum. If every candidate is refuted the
/// incumbent itself is optimal. When the node or time budget runs out first,
/// the best layout found so far is returned with proven_optimal = false.
///
/// `max_width` (0 = unlimited) restricts the layouts considered; widths below
/// the largest recurrence count of a single qubit are rejected outright.
inline SolveResult solve_exact(const BoxSet& b, const SolverBudget& budget = {},
                               int max_width = 0) {
  const auto start = detail::SteadyClock::now();
  if (b.empty()) {
    throw std::invalid_argument("solve_exact: empty box set");
  }

  const long long lower = static_cast<long long>(optimal_patch_count(b));
  SolveResult incumbent = solve_greedy(b, max_width);
  const bool incumbent_in_width =
      max_width == 0 || bounding_box(incumbent.layout).width() <= max_width;

  const detail::SharedIndex idx = detail::SharedIndex::build(b);
  const int n_boxes = static_cast<int>(b.boxes().size());
  const int w_min = std::max(1, idx.max_occurrences);
  const int w_max = max_width > 0 ? std::min(n_boxes, max_width) : n_boxes;
  if (w_min > w_max) {
    throw std::invalid_argument(
        "solve_exact: width limit below the minimum feasible width");
  }
  int h_min = 1;
  for (int s : idx.box_size) h_min = std::max(h_min, s);
  const int h_max = static_cast<int>(b.total_occurrences());

  if (incumbent_in_width && incumbent.area == lower) {
    incumbent.proven_optimal = true;
    incumbent.nodes_explored = 0;
    incumbent.wall_time = detail::seconds_since(start);
    return incumbent;
  }

  const long long ub = incumbent_in_width ? incumbent.area : LLONG_MAX;
  struct Frame {
    long long area;
    int w, h;
    auto operator<=>(const Frame&) const = default;
  };
  std::vector<Frame> frames;
  for (int w = w_min; w <= w_max; ++w) {
    for (int h = h_min; h <= h_max; ++h) {
      const long long area = static_cast<long long>(w) * h;
      if (area >= lower && area < ub) frames.push_back({area, w, h});
    }
  }
  std::sort(frames.begin(), frames.end());

  detail::FrameSearch search(b, idx, budget, start);
  for (const Frame& f : frames) {
    std::vector<Patch> patches;
    const bool found = search.run(f.w, f.h, &patches);
    if (found) {
      SolveResult res;
      res.layout = Layout(std::move(patches));
      res.area = layout_area(res.layout);
      res.proven_optimal = true;
      res.nodes_explored = search.nodes();
      res.wall_time = detail::seconds_since(start);
      return res;
    }
    if (search.out_of_budget()) {
      if (!incumbent_in_width) {
        throw std::runtime_error(
            "solve_exact: budget exhausted before any width-feasible layout "
            "was found");
      }
      incumbent.proven_optimal = false;
      incumbent.nodes_explored = search.nodes();
      incumbent.wall_time = detail::seconds_since(start);
      return incumbent;
    }
  }

  if (!incumbent_in_width) {
    throw std::runtime_error("solve_exact: no valid layout within max width");
  }
  incumbent.proven_optimal = true;
  incumbent.nodes_explored = search.nodes();
  incumbent.wall_time = detail::seconds_since(start);
  return incumbent;
}

}  // namespace lspack
