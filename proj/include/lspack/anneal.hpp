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
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "lspack/bounds.hpp"
#include "lspack/boxes.hpp"
#include "lspack/layout.hpp"
#include "lspack/solver.hpp"
#include "lspack/validate.hpp"

namespace lspack {

/// Annealing schedule. Zeros mean "derive a default from the instance":
/// initial temperature defaults to the mean box size, the iteration count to
/// min(budget.max_nodes, 60000).
struct AnnealConfig {
  double cooling = 0.995;
  double initial_temperature = 0.0;
  std::uint64_t iterations = 0;
};

namespace detail {

// Candidate state of the annealer: boxes distributed over ordered columns
// plus one exclusive row per recurring qubit. Materialization is total; bad
// pin placements surface as validation violations and are paid for in the
// energy, not rejected.
struct AnnealState {
  std::vector<std::vector<int>> columns;
  std::vector<int> shared_row;  // rank -> exclusive row, a permutation
};

inline Layout materialize_anneal(const AnnealState& st, const BoxSet& b,
                                 const SharedIndex& idx) {
  const int shared_rows = static_cast<int>(idx.count());
  std::vector<Patch> patches;
  patches.reserve(b.total_occurrences());
  for (std::size_t c = 0; c < st.columns.size(); ++c) {
    int cursor = 0;
    for (int id : st.columns[c]) {
      const PatchBox& box = b.boxes()[id];
      std::vector<int> rows(box.members.size(), -1);
      int block_max = -1;
      std::size_t next_shared = 0;
      for (std::size_t m = 0; m < box.members.size(); ++m) {
        if (b.occurrence_count(box.members[m]) >= 2) {
          const int rank = idx.box_shared[id][next_shared++];
          const int want = st.shared_row[rank];
          if (want >= cursor) {
            rows[m] = want;
            block_max = std::max(block_max, want);
          }
        }
      }
      int next_free = std::max(cursor, shared_rows);
      for (std::size_t m = 0; m < box.members.size(); ++m) {
        if (rows[m] < 0) {
          rows[m] = next_free++;
          block_max = std::max(block_max, rows[m]);
        }
      }
      for (std::size_t m = 0; m < box.members.size(); ++m) {
        patches.push_back(Patch{Cell{static_cast<int>(c), rows[m]}, box.id,
                                box.members[m]});
      }
      cursor = block_max + 1;
    }
  }
  return compressed(Layout(std::move(patches)));
}

inline AnnealState state_from_layout(const Layout& l, const BoxSet& b) {
  // Column of a box = column of its patches; order within a column by the
  // topmost patch.
  std::map<int, std::map<int, int>> per_col;  // col -> min row -> box
  std::map<int, std::pair<int, int>> box_pos;
  for (const Patch& p : l.patches()) {
    auto it = box_pos.find(p.box);
    if (it == box_pos.end()) {
      box_pos[p.box] = {p.cell.col, p.cell.row};
    } else {
      it->second.second = std::min(it->second.second, p.cell.row);
    }
  }
  for (const auto& [box, pos] : box_pos) {
    per_col[pos.first][pos.second] = box;
  }
  AnnealState st;
  for (const auto& [_, stack] : per_col) {
    std::vector<int> colboxes;
    for (const auto& [__, box] : stack) colboxes.push_back(box);
    st.columns.push_back(std::move(colboxes));
  }
  return st;
}

}  // namespace detail

/// Simulated annealing over (column assignment, order within column,
/// recurring-qubit rows). Energy is the compressed bounding-box area plus a
/// dominating penalty per validity violation. Starts from the greedy layout,
/// keeps the best valid state ever seen and falls back to greedy if none
/// improves on it. Deterministic for a fixed seed.
inline SolveResult solve_anneal(const BoxSet& b, const SolverBudget& budget = {},
                                const AnnealConfig& config = {},
                                int max_width = 0) {
  const auto start = detail::SteadyClock::now();
  SolveResult greedy = solve_greedy(b, max_width);
  if (b.empty()) return greedy;

  const detail::SharedIndex idx = detail::SharedIndex::build(b);
  const int n_boxes = static_cast<int>(b.boxes().size());
  const int n_shared = static_cast<int>(idx.count());
  const long long n_occ = static_cast<long long>(b.total_occurrences());
  const long long penalty = 2 * n_occ * n_occ + 1;
  const int width_cap = max_width > 0 ? max_width : n_boxes;

  detail::AnnealState state = detail::state_from_layout(greedy.layout, b);
  state.shared_row.resize(n_shared);
  for (int r = 0; r < n_shared; ++r) state.shared_row[r] = r;

  auto energy_of = [&](const detail::AnnealState& st, Layout* out) {
    Layout l = detail::materialize_anneal(st, b, idx);
    const long long violations =
        static_cast<long long>(validate(l, b).violations.size());
    const long long e = layout_area(l) + penalty * violations;
    if (out) *out = std::move(l);
    return std::pair<long long, long long>{e, violations};
  };

  Layout current_layout;
  auto [current_energy, current_violations] = energy_of(state, &current_layout);
  Layout best_layout = greedy.layout;
  long long best_area = greedy.area;
  if (current_violations == 0 && layout_area(current_layout) < best_area) {
    best_layout = current_layout;
    best_area = layout_area(current_layout);
  }

  std::mt19937_64 rng(budget.seed);
  double temperature = config.initial_temperature;
  if (temperature <= 0.0) {
    temperature = static_cast<double>(n_occ) / std::max(1, n_boxes);
  }
  const std::uint64_t iterations =
      config.iterations > 0 ? config.iterations
                            : std::min<std::uint64_t>(budget.max_nodes, 60'000);

  auto pick = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };

  std::uint64_t it = 0;
  for (; it < iterations; ++it) {
    if ((it & 0x3ff) == 0 &&
        detail::seconds_since(start) > budget.max_seconds) {
      break;
    }
    detail::AnnealState next = state;
    bool mutated = false;
    for (int attempt = 0; attempt < 8 && !mutated; ++attempt) {
      switch (rng() % 4) {
        case 0: {  // swap the columns of two boxes
          if (next.columns.size() < 2) break;
          std::size_t c1 = pick(next.columns.size());
          std::size_t c2 = pick(next.columns.size());
          if (c1 == c2) break;
          std::size_t i1 = pick(next.columns[c1].size());
          std::size_t i2 = pick(next.columns[c2].size());
          std::swap(next.columns[c1][i1], next.columns[c2][i2]);
          mutated = true;
          break;
        }
        case 1: {  // move one box to another (possibly new) column
          std::size_t c1 = pick(next.columns.size());
          std::size_t i1 = pick(next.columns[c1].size());
          const bool may_open =
              next.columns.size() < static_cast<std::size_t>(width_cap);
          std::size_t c2 = pick(next.columns.size() + (may_open ? 1 : 0));
          if (c2 == c1) break;
          const int box = next.columns[c1][i1];
          next.columns[c1].erase(next.columns[c1].begin() +
                                 static_cast<std::ptrdiff_t>(i1));
          if (c2 == next.columns.size()) {
            next.columns.push_back({box});
          } else {
            std::size_t at = pick(next.columns[c2].size() + 1);
            next.columns[c2].insert(
                next.columns[c2].begin() + static_cast<std::ptrdiff_t>(at),
                box);
          }
          if (next.columns[c1].empty()) {
            next.columns.erase(next.columns.begin() +
                               static_cast<std::ptrdiff_t>(c1));
          }
          mutated = true;
          break;
        }
        case 2: {  // reorder inside one column
          std::size_t c1 = pick(next.columns.size());
          if (next.columns[c1].size() < 2) break;
          std::size_t i1 = pick(next.columns[c1].size());
          std::size_t i2 = pick(next.columns[c1].size());
          if (i1 == i2) break;
          std::swap(next.columns[c1][i1], next.columns[c1][i2]);
          mutated = true;
          break;
        }
        default: {  // swap the rows of two recurring qubits
          if (n_shared < 2) break;
          std::size_t r1 = pick(static_cast<std::size_t>(n_shared));
          std::size_t r2 = pick(static_cast<std::size_t>(n_shared));
          if (r1 == r2) break;
          std::swap(next.shared_row[r1], next.shared_row[r2]);
          mutated = true;
          break;
        }
      }
    }
    if (!mutated) continue;

    Layout next_layout;
    auto [next_energy, next_violations] = energy_of(next, &next_layout);
    const double delta = static_cast<double>(next_energy - current_energy);
    bool accept = delta <= 0.0;
    if (!accept && temperature > 1e-12) {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      accept = unit(rng) < std::exp(-delta / temperature);
    }
    if (accept) {
      state = std::move(next);
      current_energy = next_energy;
      current_violations = next_violations;
      current_layout = std::move(next_layout);
      if (current_violations == 0 &&
          layout_area(current_layout) < best_area) {
        best_layout = current_layout;
        best_area = layout_area(current_layout);
      }
    }
    temperature *= config.cooling;
  }

  SolveResult res;
  res.layout = std::move(best_layout);
  res.area = best_area;
  res.proven_optimal =
      res.area == static_cast<long long>(optimal_patch_count(b));
  res.nodes_explored = it;
  res.wall_time = detail::seconds_since(start);
  return res;
}

}  // namespace lspack
