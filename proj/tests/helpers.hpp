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
#include <random>
#include <vector>

#include "lspack/boxes.hpp"
#include "lspack/layout.hpp"

namespace lspack::testing {

// Boxes over fresh qubits, one per size entry.
inline BoxSet make_disjoint_boxes(const std::vector<int>& sizes) {
  std::vector<PatchBox> boxes;
  QubitId next = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    PatchBox box;
    box.id = static_cast<BoxId>(i);
    for (int k = 0; k < sizes[i]; ++k) box.members.push_back(next++);
    boxes.push_back(std::move(box));
  }
  return BoxSet::from_boxes(std::move(boxes));
}

// Independent minimum-area oracle for disjoint boxes: enumerate every set
// partition of the boxes into columns; a column of total load h packs into h
// rows, so a partition into k columns costs k * max(load). Box order and row
// gaps cannot improve on that.
inline long long disjoint_min_area_oracle(const std::vector<int>& sizes) {
  const std::size_t n = sizes.size();
  std::vector<int> group_of(n, 0);
  std::vector<long long> load;
  long long best = -1;

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      long long max_load = 0;
      for (long long l : load) max_load = std::max(max_load, l);
      const long long area = static_cast<long long>(load.size()) * max_load;
      if (best < 0 || area < best) best = area;
      return;
    }
    for (std::size_t g = 0; g < load.size(); ++g) {
      load[g] += sizes[i];
      self(self, i + 1);
      load[g] -= sizes[i];
    }
    load.push_back(sizes[i]);
    self(self, i + 1);
    load.pop_back();
  };
  recurse(recurse, 0);
  return best;
}

// All multisets of `count` values drawn from [lo, hi], nondecreasing.
inline std::vector<std::vector<int>> size_multisets(int count, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int min_value) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int v = min_value; v <= hi; ++v) {
      current.push_back(v);
      self(self, remaining - 1, v);
      current.pop_back();
    }
  };
  recurse(recurse, count, lo);
  return out;
}

// Randomized box sets with a controlled number of recurring qubits: disjoint
// boxes first, then up to `max_shared` members replaced by a qubit of another
// box.
inline BoxSet random_box_set(std::mt19937_64& rng, int max_boxes = 8,
                             int max_size = 6, int max_shared = 3) {
  const int n_boxes = 1 + static_cast<int>(rng() % max_boxes);
  std::vector<std::vector<QubitId>> members(n_boxes);
  QubitId next = 0;
  for (auto& m : members) {
    const int size = 2 + static_cast<int>(rng() % (max_size - 1));
    for (int k = 0; k < size; ++k) m.push_back(next++);
  }
  if (n_boxes >= 2 && max_shared > 0) {
    const int wanted = static_cast<int>(rng() % (max_shared + 1));
    int made = 0;
    for (int attempt = 0; attempt < 32 && made < wanted; ++attempt) {
      const int from = static_cast<int>(rng() % n_boxes);
      const int to = static_cast<int>(rng() % n_boxes);
      if (from == to) continue;
      const QubitId q = members[from][rng() % members[from].size()];
      if (std::find(members[to].begin(), members[to].end(), q) !=
          members[to].end()) {
        continue;
      }
      // replace a still-private member of `to`
      std::vector<std::size_t> private_slots;
      for (std::size_t s = 0; s < members[to].size(); ++s) {
        const QubitId candidate = members[to][s];
        int occurrences = 0;
        for (const auto& m : members) {
          occurrences +=
              static_cast<int>(std::count(m.begin(), m.end(), candidate));
        }
        if (occurrences == 1) private_slots.push_back(s);
      }
      if (private_slots.empty()) continue;
      members[to][private_slots[rng() % private_slots.size()]] = q;
      ++made;
    }
  }
  std::vector<PatchBox> boxes;
  for (int i = 0; i < n_boxes; ++i) {
    boxes.push_back(PatchBox{static_cast<BoxId>(i), members[i]});
  }
  return BoxSet::from_boxes(std::move(boxes));
}

inline Layout reflected_left_right(const Layout& l) {
  std::vector<Patch> patches = l.patches();
  for (Patch& p : patches) p.cell.col = -p.cell.col;
  return Layout(std::move(patches));
}

inline Layout reflected_top_bottom(const Layout& l) {
  std::vector<Patch> patches = l.patches();
  for (Patch& p : patches) p.cell.row = -p.cell.row;
  return Layout(std::move(patches));
}

}  // namespace lspack::testing
