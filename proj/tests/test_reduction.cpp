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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lspack/bounds.hpp"
#include "lspack/exact.hpp"
#include "lspack/formats.hpp"
#include "lspack/reduction.hpp"

using namespace lspack;

TEST_CASE("validate_instance checks cardinality, sum and bounds") {
  CHECK(validate_instance({2, 12, {4, 4, 4, 4, 4, 4}, true}).ok());

  const auto bound = validate_instance({2, 12, {5, 4, 4, 4, 4, 3}, true});
  REQUIRE_FALSE(bound.ok());
  bool mentions_bound = false;
  for (const std::string& p : bound.problems) {
    mentions_bound = mentions_bound || p.find("above L/3") != std::string::npos;
  }
  CHECK(mentions_bound);

  CHECK_FALSE(validate_instance({2, 12, {4, 4, 4, 4, 4, 3}, true}).ok());
  CHECK_FALSE(validate_instance({2, 12, {4, 4, 4, 4, 4}, true}).ok());

  // the same values pass without strict bounds when the sum works out
  CHECK(validate_instance({2, 10, {2, 2, 2, 4, 5, 5}, false}).ok());
}

TEST_CASE("gadget counts follow the published formulas") {
  SECTION("s=1, L=6") {
    const GadgetCircuit g = instance_to_circuit({1, 6, {2, 2, 2}, true});
    CHECK(g.circuit.qubit_count == 15);  // s(L+1)+L+2
    const BoxSet b = to_boxes(g.circuit);
    CHECK(optimal_patch_count(b) == 16);  // (L+2)(s+1)
    CHECK(g.part_a_boxes.size() == 3);
    CHECK(g.width_boxes.size() == 1);
  }
  SECTION("s=2, L=12") {
    const GadgetCircuit g =
        instance_to_circuit({2, 12, {4, 4, 4, 4, 4, 4}, true});
    CHECK(g.circuit.qubit_count == 40);
    const BoxSet b = to_boxes(g.circuit);
    CHECK(b.boxes().size() == 9);  // 6 value blocks + 2 chain + 1 height
    CHECK(optimal_patch_count(b) == 42);
  }
  SECTION("random relaxed instances") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 30; ++iter) {
      const std::uint32_t s = 1 + rng() % 4;
      const std::uint32_t L = 3 + rng() % 28;
      ThreePartitionInstance inst{s, L, {}, false};
      inst.values.assign(3 * s, 1);
      for (std::uint32_t extra = s * L - 3 * s; extra > 0; --extra) {
        inst.values[rng() % inst.values.size()] += 1;
      }
      const GadgetCircuit g = instance_to_circuit(inst);
      CHECK(g.circuit.qubit_count == s * (L + 1) + L + 2);
      CHECK(optimal_patch_count(to_boxes(g.circuit)) == (L + 2) * (s + 1));
    }
  }
}

TEST_CASE("the link qubit recurs s+1 times and forces the width") {
  const ThreePartitionInstance inst{2, 6, {2, 2, 2, 2, 2, 2}, true};
  const GadgetCircuit g = instance_to_circuit(inst);
  const BoxSet b = to_boxes(g.circuit);
  const QubitId link = inst.s + 1;
  CHECK(b.occurrence_count(link) == inst.s + 1);

  const SolveResult res = solve_exact(b);
  REQUIRE(res.proven_optimal);
  CHECK(bounding_box(res.layout).width() >= static_cast<int>(inst.s) + 1);
}

TEST_CASE("instance_to_circuit rejects invalid instances") {
  CHECK_THROWS_AS(instance_to_circuit({2, 12, {4, 4, 4, 4, 4, 3}, true}),
                  std::invalid_argument);
}

TEST_CASE("brute force oracle on the named instances") {
  SECTION("all fours") {
    const auto part = brute_force_partition({2, 12, {4, 4, 4, 4, 4, 4}, true});
    REQUIRE(part.has_value());
    REQUIRE(part->sets.size() == 2);
    CHECK(part->sets[0] == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(part->sets[1] == std::vector<std::uint32_t>{4, 5, 6});
  }
  SECTION("single triple") {
    const auto part = brute_force_partition({1, 3, {1, 1, 1}, true});
    REQUIRE(part.has_value());
    CHECK(part->sets == std::vector<std::vector<std::uint32_t>>{{1, 2, 3}});
  }
  SECTION("relaxed split with uneven set sizes") {
    // solvable only with a 4-element and a 2-element set
    const auto part =
        brute_force_partition({2, 10, {2, 2, 2, 4, 5, 5}, false});
    REQUIRE(part.has_value());
    for (const auto& set : part->sets) {
      std::uint32_t sum = 0;
      const std::vector<std::uint32_t> values{2, 2, 2, 4, 5, 5};
      for (std::uint32_t idx : set) sum += values[idx - 1];
      CHECK(sum == 10);
    }
  }
  SECTION("parity-blocked relaxed instance") {
    CHECK_FALSE(
        brute_force_partition({2, 7, {2, 2, 2, 2, 2, 4}, false}).has_value());
  }
  SECTION("size guard") {
    ThreePartitionInstance big{6, 3, {}, false};
    big.values.assign(18, 1);
    CHECK_THROWS_AS(brute_force_partition(big), std::invalid_argument);
    CHECK_NOTHROW(brute_force_partition(big, 18));
  }
}

TEST_CASE("decide_via_placement agrees with the oracle") {
  SECTION("yes instances") {
    CHECK(decide_via_placement({2, 12, {4, 4, 4, 4, 4, 4}, true}) ==
          Decision::yes);
    CHECK(decide_via_placement({1, 3, {1, 1, 1}, true}) == Decision::yes);
    CHECK(decide_via_placement({2, 10, {2, 2, 2, 4, 5, 5}, false}) ==
          Decision::yes);
  }
  SECTION("no instance") {
    CHECK(decide_via_placement({2, 7, {2, 2, 2, 2, 2, 4}, false}) ==
          Decision::no);
  }
  SECTION("budget exhaustion on a no-instance is an explicit unknown") {
    SolverBudget tiny;
    tiny.max_nodes = 1;
    CHECK(decide_via_placement({2, 7, {2, 2, 2, 2, 2, 4}, false}, tiny) ==
          Decision::unknown);
  }
}

TEST_CASE("partition_from_layout inverts the reduction") {
  SECTION("two sets of three") {
    const ThreePartitionInstance inst{2, 12, {4, 4, 4, 4, 4, 4}, true};
    const GadgetCircuit g = instance_to_circuit(inst);
    const SolveResult res = solve_exact(to_boxes(g.circuit));
    REQUIRE(res.proven_optimal);
    const Partition part = partition_from_layout(res.layout, g);
    REQUIRE(part.sets.size() == 2);
    for (const auto& set : part.sets) {
      std::uint32_t sum = 0;
      for (std::uint32_t idx : set) sum += inst.values[idx - 1];
      CHECK(sum == inst.L);
    }
  }
  SECTION("single set") {
    const ThreePartitionInstance inst{1, 6, {2, 2, 2}, true};
    const GadgetCircuit g = instance_to_circuit(inst);
    const SolveResult res = solve_exact(to_boxes(g.circuit));
    const Partition part = partition_from_layout(res.layout, g);
    CHECK(part.sets == std::vector<std::vector<std::uint32_t>>{{1, 2, 3}});
  }
  SECTION("suboptimal layouts are rejected") {
    const ThreePartitionInstance inst{1, 6, {2, 2, 2}, true};
    const GadgetCircuit g = instance_to_circuit(inst);
    const BoxSet b = to_boxes(g.circuit);
    const Layout canonical = canonical_row_placement(b, g.circuit.qubit_count);
    CHECK_THROWS_AS(partition_from_layout(canonical, g),
                    std::invalid_argument);
  }
}

TEST_CASE("reduction equivalence on a small strict and relaxed mix") {
  // the full sweep lives in the acceptance suite
  std::mt19937_64 rng(2026);
  int checked = 0;
  for (int iter = 0; iter < 12; ++iter) {
    const std::uint32_t L = 4 + rng() % 7;
    ThreePartitionInstance inst{2, L, {}, false};
    inst.values.assign(6, 1);
    for (std::uint32_t extra = 2 * L - 6; extra > 0; --extra) {
      inst.values[rng() % 6] += 1;
    }
    const bool oracle = brute_force_partition(inst).has_value();
    const Decision placed = decide_via_placement(inst);
    REQUIRE(placed != Decision::unknown);
    CHECK((placed == Decision::yes) == oracle);
    ++checked;
  }
  CHECK(checked == 12);
}

TEST_CASE("instance files round-trip and report errors") {
  const ThreePartitionInstance inst{2, 10, {2, 2, 2, 4, 5, 5}, false};
  const ThreePartitionInstance again = parse_instance(write_instance(inst));
  CHECK(again.s == inst.s);
  CHECK(again.L == inst.L);
  CHECK(again.values == inst.values);
  CHECK(again.strict_bounds == inst.strict_bounds);

  CHECK_THROWS_AS(parse_instance("a 4\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("3partition s=2 L=12 strict=1\na 4\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance("3partition s=2 L=12 strict=7\n"), ParseError);
}
