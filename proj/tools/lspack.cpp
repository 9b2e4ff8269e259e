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

// Command-line front end for the lspack library.
//
// Exit codes, shared by all subcommands:
//   0  success (solve: proven optimal; verify: valid and tight; extract: yes)
//   1  valid but suboptimal layout / extraction answered no
//   2  invalid input (bad files, bad flags, infeasible constraints)
//   3  budget-limited best-effort result

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lspack/lspack.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << content;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LSPACK_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

struct SolveFlags {
  std::string method = "exact";
  std::uint64_t seed = default_seed();
  std::uint64_t max_nodes = lspack::SolverBudget{}.max_nodes;
  double max_seconds = lspack::SolverBudget{}.max_seconds;
  int max_width = 0;
};

lspack::SolveResult run_solver(const lspack::BoxSet& boxes,
                               const SolveFlags& flags) {
  lspack::SolverBudget budget;
  budget.max_nodes = flags.max_nodes;
  budget.max_seconds = flags.max_seconds;
  budget.seed = flags.seed;
  if (flags.method == "exact") {
    return lspack::solve_exact(boxes, budget, flags.max_width);
  }
  if (flags.method == "greedy") {
    return lspack::solve_greedy(boxes, flags.max_width);
  }
  if (flags.method == "anneal") {
    return lspack::solve_anneal(boxes, budget, {}, flags.max_width);
  }
  throw std::runtime_error("unknown method '" + flags.method + "'");
}

int cmd_translate(const std::string& circuit_file) {
  const lspack::Circuit c = lspack::parse_circuit(read_file(circuit_file));
  const lspack::BoxSet boxes = lspack::to_boxes(c);
  std::string out;
  for (const lspack::PatchBox& box : boxes.boxes()) {
    out += "box " + std::to_string(box.id) + ":";
    for (lspack::QubitId q : box.members) out += " " + std::to_string(q);
    out += "\n";
  }
  out += "boxes=" + std::to_string(boxes.boxes().size()) + "\n";
  out += "optimal_patches=" +
         std::to_string(lspack::optimal_patch_count(boxes)) + "\n";
  out += "worst_case_patches=" +
         std::to_string(lspack::worst_case_patch_count(boxes, c.qubit_count)) +
         "\n";
  std::cout << out;
  return 0;
}

int cmd_solve(const std::string& circuit_file, const SolveFlags& flags,
              const std::string& output) {
  const lspack::Circuit c = lspack::parse_circuit(read_file(circuit_file));
  const lspack::BoxSet boxes = lspack::to_boxes(c);
  lspack::SolveResult res;
  if (boxes.empty()) {
    res.proven_optimal = true;
  } else {
    res = run_solver(boxes, flags);
  }
  write_output(output, lspack::write_solve_result(res));
  std::cerr << "area=" << res.area << " proven_optimal=" << res.proven_optimal
            << " nodes=" << res.nodes_explored << " wall_time=" << std::fixed
            << std::setprecision(3) << res.wall_time << "s\n";
  return res.proven_optimal ? 0 : 3;
}

int cmd_verify(const std::string& layout_file, const std::string& circuit_file) {
  const lspack::Layout layout = lspack::parse_layout(read_file(layout_file));
  const lspack::Circuit c = lspack::parse_circuit(read_file(circuit_file));
  const lspack::BoxSet boxes = lspack::to_boxes(c);

  const lspack::ValidationReport rep = lspack::validate(layout, boxes);
  for (const lspack::Violation& v : rep.violations) {
    std::cout << "violation=" << lspack::to_string(v.kind) << " " << v.details
              << "\n";
  }
  std::cout << "valid=" << (rep.ok() ? 1 : 0) << "\n";
  std::cout << "area=" << lspack::layout_area(layout) << "\n";
  std::cout << "optimal_patches=" << lspack::optimal_patch_count(boxes) << "\n";
  const bool tight = lspack::is_theoretically_optimal(layout, boxes);
  std::cout << "theoretically_optimal=" << (tight ? 1 : 0) << "\n";
  if (!rep.ok()) return 2;
  return tight ? 0 : 1;
}

int cmd_reduce(const std::string& instance_file, const std::string& output) {
  const lspack::ThreePartitionInstance inst =
      lspack::parse_instance(read_file(instance_file));
  const lspack::InstanceReport rep = lspack::validate_instance(inst);
  if (!rep.ok()) {
    for (const std::string& p : rep.problems) {
      std::cerr << "invalid instance: " << p << "\n";
    }
    return 2;
  }
  const lspack::GadgetCircuit g = lspack::instance_to_circuit(inst);
  write_output(output, lspack::write_circuit(g.circuit));
  return 0;
}

int cmd_extract(const std::string& layout_file,
                const std::string& instance_file) {
  const lspack::ThreePartitionInstance inst =
      lspack::parse_instance(read_file(instance_file));
  const lspack::InstanceReport rep = lspack::validate_instance(inst);
  if (!rep.ok()) {
    for (const std::string& p : rep.problems) {
      std::cerr << "invalid instance: " << p << "\n";
    }
    return 2;
  }
  const lspack::GadgetCircuit g = lspack::instance_to_circuit(inst);
  const lspack::Layout layout = lspack::parse_layout(read_file(layout_file));
  const lspack::BoxSet boxes = lspack::to_boxes(g.circuit);
  if (!lspack::is_theoretically_optimal(layout, boxes)) {
    std::cout << "NO (layout not optimal)\n";
    return 1;
  }
  const lspack::Partition part = lspack::partition_from_layout(layout, g);
  for (std::size_t i = 0; i < part.sets.size(); ++i) {
    std::cout << "set " << (i + 1) << ":";
    for (std::uint32_t idx : part.sets[i]) std::cout << " " << idx;
    std::cout << "\n";
  }
  return 0;
}

int cmd_estimate_configs(std::uint32_t n, bool unlabeled) {
  const lspack::ConfigCount cc = lspack::config_count(n, !unlabeled);
  std::cout << "n_sets=" << cc.n_sets << "\n";
  std::cout << "configurations=" << cc.count << "\n";
  return 0;
}

int cmd_estimate_time(std::uint32_t n, double rate_hz) {
  const lspack::ConfigCount cc = lspack::config_count(n);
  const lspack::BigFloat seconds =
      lspack::estimate_enumeration_time(cc, rate_hz);
  std::cout << "n_sets=" << cc.n_sets << "\n";
  std::cout << "configurations=" << cc.count << "\n";
  std::cout << std::setprecision(6);
  std::cout << "rate_hz=" << rate_hz << "\n";
  std::cout << "seconds=" << seconds << "\n";
  std::cout << "hours=" << seconds / 3600 << "\n";
  return 0;
}

int cmd_estimate_distillation() {
  const lspack::ResourceReport rep = lspack::distillation_case_study();
  std::cout << "n_qubits=" << rep.n_qubits << "\n";
  std::cout << "optimal_patches=" << rep.optimal_patches << "\n";
  std::cout << "injection_patches=" << rep.injection_patches << "\n";
  std::cout << "total_optimal=" << rep.total_optimal << "\n";
  std::cout << "worst_case_patches=" << rep.worst_case_patches << "\n";
  std::cout << "ratio=" << std::fixed << std::setprecision(6) << rep.ratio
            << "\n";
  return 0;
}

int cmd_render(const std::string& layout_file, const std::string& format,
               int cell_size, bool show_box_ids, const std::string& output) {
  const lspack::Layout layout = lspack::parse_layout(read_file(layout_file));
  lspack::RenderOptions opts;
  opts.cell_size_px = cell_size;
  opts.show_box_ids = show_box_ids;
  if (format == "svg") {
    opts.format = lspack::RenderFormat::svg;
  } else if (format == "ascii") {
    opts.format = lspack::RenderFormat::ascii;
  } else {
    throw std::runtime_error("unknown render format '" + format + "'");
  }
  write_output(output, lspack::render(layout, opts));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice-surgery patch placement toolkit"};
  app.require_subcommand(1);

  std::string circuit_file, layout_file, instance_file, output;
  SolveFlags solve_flags;
  std::string render_format = "ascii";
  int cell_size = 24;
  bool show_box_ids = false;
  bool unlabeled = false;
  std::uint32_t n_sets = 1;
  double rate_hz = 3.5e9;

  auto* translate = app.add_subcommand(
      "translate", "merge a circuit's CNOTs and print its boxes and bounds");
  translate->add_option("circuit", circuit_file, "circuit file")->required();

  auto* solve =
      app.add_subcommand("solve", "find a low-area placement for a circuit");
  solve->add_option("circuit", circuit_file, "circuit file")->required();
  solve->add_option("--method", solve_flags.method,
                    "exact, greedy or anneal (default exact)");
  solve->add_option("--seed", solve_flags.seed,
                    "RNG seed (default: LSPACK_SEED or 0)");
  solve->add_option("--max-nodes", solve_flags.max_nodes,
                    "search node budget");
  solve->add_option("--max-seconds", solve_flags.max_seconds,
                    "wall-clock budget");
  solve->add_option("--max-width", solve_flags.max_width,
                    "cap the layout width (0 = unlimited)");
  solve->add_option("-o,--output", output, "layout file (default stdout)");

  auto* verify = app.add_subcommand(
      "verify", "validate a layout against a circuit and judge optimality");
  verify->add_option("layout", layout_file, "layout file")->required();
  verify->add_option("circuit", circuit_file, "circuit file")->required();

  auto* reduce = app.add_subcommand(
      "reduce", "translate a 3-partition instance into a gadget circuit");
  reduce->add_option("instance", instance_file, "instance file")->required();
  reduce->add_option("-o,--output", output, "circuit file (default stdout)");

  auto* extract = app.add_subcommand(
      "extract", "read a partition back out of an optimal gadget layout");
  extract->add_option("layout", layout_file, "layout file")->required();
  extract->add_option("instance", instance_file, "instance file")->required();

  auto* estimate = app.add_subcommand("estimate", "resource arithmetic");
  estimate->require_subcommand(1);
  auto* configs = estimate->add_subcommand(
      "configs", "count the assignments of 3N elements to N triples");
  configs->add_option("N", n_sets, "number of sets")->required();
  configs->add_flag("--unlabeled", unlabeled, "divide by N! (unordered sets)");
  auto* time = estimate->add_subcommand(
      "time", "enumeration time for N sets at a fixed check rate");
  time->add_option("N", n_sets, "number of sets")->required();
  time->add_option("--rate-hz", rate_hz, "checks per second (default 3.5e9)");
  auto* distillation = estimate->add_subcommand(
      "distillation", "resource numbers of the two-round Y-state distillation");

  auto* render = app.add_subcommand("render", "draw a layout");
  render->add_option("layout", layout_file, "layout file")->required();
  render->add_option("--format", render_format, "ascii or svg");
  render->add_option("--cell-size", cell_size, "svg cell size in px");
  render->add_flag("--show-box-ids", show_box_ids,
                   "prefix svg patch text with the box id");
  render->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (translate->parsed()) return cmd_translate(circuit_file);
    if (solve->parsed()) return cmd_solve(circuit_file, solve_flags, output);
    if (verify->parsed()) return cmd_verify(layout_file, circuit_file);
    if (reduce->parsed()) return cmd_reduce(instance_file, output);
    if (extract->parsed()) return cmd_extract(layout_file, instance_file);
    if (estimate->parsed()) {
      if (configs->parsed()) return cmd_estimate_configs(n_sets, unlabeled);
      if (time->parsed()) return cmd_estimate_time(n_sets, rate_hz);
      if (distillation->parsed()) return cmd_estimate_distillation();
    }
    if (render->parsed()) {
      return cmd_render(layout_file, render_format, cell_size, show_box_ids,
                        output);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
