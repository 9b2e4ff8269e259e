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
#include <utility>
#include <vector>

#include "lspack/circuit.hpp"

namespace lspack {

/// The patch column generated by one multi-target CNOT: its members are the
/// control followed by the targets. Members are pairwise distinct. A single
/// member box is the degenerate target-free gate.
struct PatchBox {
  BoxId id = 0;
  std::vector<QubitId> members;

  std::size_t size() const { return members.size(); }
  bool contains(QubitId q) const {
    for (QubitId m : members) {
      if (m == q) return true;
    }
    return false;
  }
};

/// One appearance of a qubit inside a box: which box and at which member
/// position.
struct Occurrence {
  BoxId box = 0;
  std::uint32_t position = 0;

  bool operator==(const Occurrence&) const = default;
};

/// The abstract placement input: boxes of qubit occurrences plus the inverse
/// index telling, for every qubit, where it occurs. Immutable after
/// construction; safe for concurrent reads.
class BoxSet {
 public:
  BoxSet() = default;

  /// Builds a BoxSet from raw boxes. Box ids must equal their position in the
  /// list; members must be nonempty and pairwise distinct per box.
  static BoxSet from_boxes(std::vector<PatchBox> boxes) {
    BoxSet b;
    b.boxes_ = std::move(boxes);
    for (std::size_t i = 0; i < b.boxes_.size(); ++i) {
      const PatchBox& box = b.boxes_[i];
      if (box.id != static_cast<BoxId>(i)) {
        throw std::invalid_argument("box id " + std::to_string(box.id) +
                                    " does not match its position " +
                                    std::to_string(i));
      }
      if (box.members.empty()) {
        throw std::invalid_argument("box " + std::to_string(i) +
                                    " has no members");
      }
      std::set<QubitId> seen;
      for (std::uint32_t pos = 0; pos < box.members.size(); ++pos) {
        QubitId q = box.members[pos];
        if (!seen.insert(q).second) {
          throw std::invalid_argument("box " + std::to_string(i) +
                                      " repeats qubit " + std::to_string(q));
        }
        b.index_[q].push_back(Occurrence{box.id, pos});
        ++b.total_;
      }
    }
    return b;
  }

  const std::vector<PatchBox>& boxes() const { return boxes_; }
  const std::map<QubitId, std::vector<Occurrence>>& occurrence_index() const {
    return index_;
  }

  std::size_t total_occurrences() const { return total_; }
  bool empty() const { return boxes_.empty(); }

  std::size_t occurrence_count(QubitId q) const {
    auto it = index_.find(q);
    return it == index_.end() ? 0 : it->second.size();
  }

  std::size_t distinct_qubit_count() const { return index_.size(); }

  /// Largest qubit id referenced; only meaningful on nonempty sets.
  QubitId max_qubit() const {
    if (index_.empty()) {
      throw std::invalid_argument("max_qubit on empty box set");
    }
    return index_.rbegin()->first;
  }

 private:
  std::vector<PatchBox> boxes_;
  std::map<QubitId, std::vector<Occurrence>> index_;
  std::size_t total_ = 0;
};

/// Extracts the box model of a circuit: one box per multi-target CNOT of the
/// merged circuit, members control-first. Merges internally, so the input
/// does not need to be merged already.
inline BoxSet to_boxes(const Circuit& c) {
  Circuit merged = merge_cnots(c);
  std::vector<PatchBox> boxes;
  boxes.reserve(merged.gates.size());
  for (std::size_t i = 0; i < merged.gates.size(); ++i) {
    const Cnot& g = merged.gates[i];
    PatchBox box;
    box.id = static_cast<BoxId>(i);
    box.members.reserve(1 + g.targets.size());
    box.members.push_back(g.control);
    box.members.insert(box.members.end(), g.targets.begin(), g.targets.end());
    boxes.push_back(std::move(box));
  }
  return BoxSet::from_boxes(std::move(boxes));
}

}  // namespace lspack
