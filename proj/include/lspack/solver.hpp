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
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "lspack/bounds.hpp"
#include "lspack/boxes.hpp"
#include "lspack/layout.hpp"
#include "lspack/validate.hpp"

namespace lspack {

struct SolverBudget {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 120.0;
  std::uint64_t seed = 0;
};

struct SolveResult {
  Layout layout;
  long long area = 0;
  bool proven_optimal = false;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;  // seconds
};

namespace detail {

using SteadyClock = std::chrono::steady_clock;

inline double seconds_since(SteadyClock::time_point start) {
  return std::chrono::duration<double>(SteadyClock::now() - start).count();
}

// Precomputed view of the recurring qubits of a box set. Shared qubits get a
// dense rank in first-appearance order; every solver keys its row constraints
// on these ranks.
struct SharedIndex {
  std::vector<QubitId> qubits;               // rank -> qubit
  std::vector<int> occurrences;              // rank -> occurrence count
  std::vector<std::vector<int>> box_shared;  // box -> ranks, in member order
  std::vector<int> box_size;                 // box -> member count
  int max_occurrences = 0;

  static SharedIndex build(const BoxSet& b) {
    SharedIndex idx;
    std::map<QubitId, int> rank;
    idx.box_shared.resize(b.boxes().size());
    idx.box_size.resize(b.boxes().size());
    for (const PatchBox& box : b.boxes()) {
      idx.box_size[box.id] = static_cast<int>(box.members.size());
      for (QubitId q : box.members) {
        if (b.occurrence_count(q) < 2) continue;
        auto [it, fresh] = rank.try_emplace(q, static_cast<int>(idx.qubits.size()));
        if (fresh) {
          idx.qubits.push_back(q);
          idx.occurrences.push_back(static_cast<int>(b.occurrence_count(q)));
          idx.max_occurrences =
              std::max(idx.max_occurrences, idx.occurrences.back());
        }
        idx.box_shared[box.id].push_back(it->second);
      }
    }
    return idx;
  }

  std::size_t count() const { return qubits.size(); }
};

// Row assignment for one column under the exclusive-row scheme used by the
// greedy and annealing solvers: shared rank r is pinned to row r, free
// members fill consecutive rows from shared_count (or the current cursor)
// upwards. Boxes with pins go first, ordered by their smallest pin; stacking
// fails when a pin falls below the cursor reached so far.
struct ColumnPlan {
  // box id -> rows parallel to the box's member list
  std::vector<std::pair<int, std::vector<int>>> box_rows;
  int height = 0;
};

inline bool plan_column(const std::vector<int>& box_ids, const BoxSet& b,
                        const SharedIndex& idx, ColumnPlan* out) {
  std::vector<int> ordered;
  for (int id : box_ids) {
    if (!idx.box_shared[id].empty()) ordered.push_back(id);
  }
  std::stable_sort(ordered.begin(), ordered.end(), [&](int lhs, int rhs) {
    return *std::min_element(idx.box_shared[lhs].begin(),
                             idx.box_shared[lhs].end()) <
           *std::min_element(idx.box_shared[rhs].begin(),
                             idx.box_shared[rhs].end());
  });
  for (int id : box_ids) {
    if (idx.box_shared[id].empty()) ordered.push_back(id);
  }

  const int shared_rows = static_cast<int>(idx.count());
  ColumnPlan plan;
  int cursor = 0;
  for (int id : ordered) {
    const PatchBox& box = b.boxes()[id];
    std::vector<int> rows(box.members.size(), -1);
    int block_max = -1;
    for (std::size_t m = 0; m < box.members.size(); ++m) {
      if (b.occurrence_count(box.members[m]) >= 2) {
        // Pinned to its exclusive row.
        int rank = -1;
        for (std::size_t r = 0; r < idx.qubits.size(); ++r) {
          if (idx.qubits[r] == box.members[m]) {
            rank = static_cast<int>(r);
            break;
          }
        }
        if (rank < cursor) return false;
        rows[m] = rank;
        block_max = std::max(block_max, rank);
      }
    }
    int next_free = std::max(cursor, shared_rows);
    for (std::size_t m = 0; m < box.members.size(); ++m) {
      if (rows[m] < 0) {
        rows[m] = next_free++;
        block_max = std::max(block_max, rows[m]);
      }
    }
    cursor = block_max + 1;
    plan.height = std::max(plan.height, cursor);
    plan.box_rows.emplace_back(id, std::move(rows));
  }
  *out = plan;
  return true;
}

inline std::vector<Patch> materialize_column(const ColumnPlan& plan, int col,
                                             const BoxSet& b) {
  std::vector<Patch> out;
  for (const auto& [id, rows] : plan.box_rows) {
    const PatchBox& box = b.boxes()[id];
    for (std::size_t m = 0; m < box.members.size(); ++m) {
      out.push_back(Patch{Cell{col, rows[m]}, box.id, box.members[m]});
    }
  }
  return out;
}

}  // namespace detail

/// First-fit-decreasing column packing. Boxes are sorted by size and dropped
/// into the first column that has room, holds no recurring qubit of the box
/// yet, and still stacks after adding it. Recurring qubits keep one exclusive
/// row each, which makes every run valid regardless of column order. Falls
/// back to canonical_row_placement whenever that does better.
///
/// `max_width` (0 = unlimited) caps the column count on a best-effort basis;
/// the fallback may still exceed it.
inline SolveResult solve_greedy(const BoxSet& b, int max_width = 0) {
  const auto start = detail::SteadyClock::now();
  SolveResult res;
  if (b.empty()) {
    res.proven_optimal = true;
    res.wall_time = detail::seconds_since(start);
    return res;
  }

  const detail::SharedIndex idx = detail::SharedIndex::build(b);
  std::vector<int> order(b.boxes().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (idx.box_size[lhs] != idx.box_size[rhs]) {
      return idx.box_size[lhs] > idx.box_size[rhs];
    }
    return lhs < rhs;
  });

  int cap = 0;
  for (int s : idx.box_size) cap = std::max(cap, s);

  std::vector<std::vector<int>> columns;
  std::vector<int> load;
  auto conflicts = [&](int col, int id) {
    for (int other : columns[col]) {
      for (int r : idx.box_shared[other]) {
        for (int mine : idx.box_shared[id]) {
          if (mine == r) return true;
        }
      }
    }
    return false;
  };
  auto try_insert = [&](int col, int id, bool ignore_cap) {
    if (!ignore_cap && load[col] + idx.box_size[id] > cap) return false;
    if (conflicts(col, id)) return false;
    std::vector<int> candidate = columns[col];
    candidate.push_back(id);
    detail::ColumnPlan plan;
    if (!detail::plan_column(candidate, b, idx, &plan)) return false;
    columns[col].push_back(id);
    load[col] += idx.box_size[id];
    return true;
  };

  for (int id : order) {
    bool placed = false;
    for (std::size_t c = 0; c < columns.size() && !placed; ++c) {
      placed = try_insert(static_cast<int>(c), id, false);
    }
    if (!placed && max_width > 0 &&
        columns.size() >= static_cast<std::size_t>(max_width)) {
      for (std::size_t c = 0; c < columns.size() && !placed; ++c) {
        placed = try_insert(static_cast<int>(c), id, true);
      }
    }
    if (!placed) {
      columns.push_back({id});
      load.push_back(idx.box_size[id]);
    }
  }

  std::vector<Patch> patches;
  patches.reserve(b.total_occurrences());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    detail::ColumnPlan plan;
    plan_column(columns[c], b, idx, &plan);
    for (Patch& p : detail::materialize_column(plan, static_cast<int>(c), b)) {
      patches.push_back(p);
    }
  }
  Layout packed = compressed(Layout(std::move(patches)));

  const std::uint32_t n_qubits = b.max_qubit() + 1;
  Layout canonical = canonical_row_placement(b, n_qubits);
  if (!validate(packed, b).ok() || layout_area(canonical) < layout_area(packed)) {
    packed = std::move(canonical);
  }

  res.layout = std::move(packed);
  res.area = layout_area(res.layout);
  res.proven_optimal =
      res.area == static_cast<long long>(optimal_patch_count(b));
  res.wall_time = detail::seconds_since(start);
  return res;
}

}  // namespace lspack
