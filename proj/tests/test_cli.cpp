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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "lspack/estimator.hpp"
#include "lspack/formats.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "lspack_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

RunResult run(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const std::string cmd = std::string(LSPACK_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2> " +
                          (work_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = slurp(out_file);
  return res;
}

}  // namespace

TEST_CASE("translate lists boxes and bounds") {
  const fs::path f = work_dir() / "simple.circuit";
  spit(f, "qubits 3\ncnot 0 1\ncnot 0 2\n");
  const RunResult r = run("translate " + f.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("box 0: 0 1 2") != std::string::npos);
  CHECK(r.out.find("boxes=1") != std::string::npos);
  CHECK(r.out.find("optimal_patches=3") != std::string::npos);
  CHECK(r.out.find("worst_case_patches=3") != std::string::npos);
}

TEST_CASE("translate handles an empty gate list") {
  const fs::path f = work_dir() / "empty.circuit";
  spit(f, "qubits 2\ninit 0 +\n");
  const RunResult r = run("translate " + f.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("boxes=0") != std::string::npos);
  CHECK(r.out.find("optimal_patches=0") != std::string::npos);
  CHECK(r.out.find("worst_case_patches=0") != std::string::npos);
}

TEST_CASE("translate exits 2 on malformed input") {
  const fs::path f = work_dir() / "broken.circuit";
  spit(f, "qubits 2\ncnot 0 0\n");
  CHECK(run("translate " + f.string()).exit_code == 2);
  CHECK(run("translate " + (work_dir() / "missing.circuit").string())
            .exit_code == 2);
}

TEST_CASE("solve and verify round-trip on a single box") {
  const fs::path circuit = work_dir() / "box.circuit";
  spit(circuit, "qubits 4\ncnot 0 1 2 3\n");
  const fs::path layout = work_dir() / "box.layout";
  const RunResult solved =
      run("solve " + circuit.string() + " -o " + layout.string());
  CHECK(solved.exit_code == 0);
  const std::string text = slurp(layout);
  CHECK(text.find("# area=4 proven_optimal=1") != std::string::npos);

  const RunResult verified =
      run("verify " + layout.string() + " " + circuit.string());
  CHECK(verified.exit_code == 0);
  CHECK(verified.out.find("valid=1") != std::string::npos);
  CHECK(verified.out.find("theoretically_optimal=1") != std::string::npos);
}

TEST_CASE("the reduce / solve / extract pipeline answers yes") {
  const fs::path instance = work_dir() / "yes.instance";
  spit(instance, "3partition s=2 L=12 strict=1\na 4\na 4\na 4\na 4\na 4\na 4\n");
  const fs::path circuit = work_dir() / "yes.circuit";
  REQUIRE(run("reduce " + instance.string() + " -o " + circuit.string())
              .exit_code == 0);
  CHECK(slurp(circuit).find("qubits 40") != std::string::npos);

  const fs::path layout = work_dir() / "yes.layout";
  const RunResult solved =
      run("solve " + circuit.string() + " -o " + layout.string());
  CHECK(solved.exit_code == 0);

  const RunResult verified =
      run("verify " + layout.string() + " " + circuit.string());
  CHECK(verified.exit_code == 0);

  const RunResult extracted =
      run("extract " + layout.string() + " " + instance.string());
  CHECK(extracted.exit_code == 0);
  CHECK(extracted.out.find("set 1:") != std::string::npos);
  CHECK(extracted.out.find("set 2:") != std::string::npos);
}

TEST_CASE("extract refuses a suboptimal layout") {
  const fs::path instance = work_dir() / "sub.instance";
  spit(instance, "3partition s=1 L=6 strict=1\na 2\na 2\na 2\n");
  const fs::path circuit = work_dir() / "sub.circuit";
  REQUIRE(run("reduce " + instance.string() + " -o " + circuit.string())
              .exit_code == 0);

  // canonical row placement: valid but full of holes
  const lspack::Circuit c = lspack::parse_circuit(slurp(circuit));
  const lspack::BoxSet b = lspack::to_boxes(c);
  const lspack::Layout canonical =
      lspack::canonical_row_placement(b, c.qubit_count);
  const fs::path layout = work_dir() / "sub.layout";
  spit(layout, lspack::write_layout(canonical));

  const RunResult verified =
      run("verify " + layout.string() + " " + circuit.string());
  CHECK(verified.exit_code == 1);

  const RunResult extracted =
      run("extract " + layout.string() + " " + instance.string());
  CHECK(extracted.exit_code == 1);
  CHECK(extracted.out.find("NO (layout not optimal)") != std::string::npos);
}

TEST_CASE("reduce exits 2 on an invalid instance") {
  const fs::path instance = work_dir() / "bad.instance";
  spit(instance, "3partition s=2 L=12 strict=1\na 4\na 4\na 4\na 4\na 4\na 3\n");
  CHECK(run("reduce " + instance.string()).exit_code == 2);
}

TEST_CASE("verify exits 2 on a corrupted layout") {
  const fs::path circuit = work_dir() / "pair.circuit";
  spit(circuit, "qubits 2\ncnot 0 1\n");
  const fs::path layout = work_dir() / "pair.layout";
  REQUIRE(run("solve " + circuit.string() + " -o " + layout.string())
              .exit_code == 0);
  // move one patch sideways: box no longer a single column
  std::string text = slurp(layout);
  const std::size_t pos = text.find("patch 0 1 0 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 13, "patch 1 1 0 1");
  spit(layout, text);

  const RunResult verified =
      run("verify " + layout.string() + " " + circuit.string());
  CHECK(verified.exit_code == 2);
  CHECK(verified.out.find("violation=BOX_NOT_SINGLE_COLUMN") !=
        std::string::npos);
}

TEST_CASE("solver exits 3 when not proven optimal") {
  // two chained boxes sharing qubits force a hole, greedy cannot prove
  const fs::path circuit = work_dir() / "distill.circuit";
  spit(circuit, lspack::write_circuit(lspack::distillation_circuit()));
  const fs::path layout = work_dir() / "distill.layout";
  const RunResult r = run("solve " + circuit.string() + " --method greedy -o " +
                          layout.string());
  CHECK(r.exit_code == 3);
  const RunResult verified =
      run("verify " + layout.string() + " " + circuit.string());
  CHECK(verified.exit_code == 1);  // valid, not tight
}

TEST_CASE("estimate subcommands print key=value lines") {
  const RunResult configs = run("estimate configs 15");
  CHECK(configs.exit_code == 0);
  CHECK(configs.out.find("configurations=254415229727832019064930237147381760"
                         "000000000") != std::string::npos);

  const RunResult unlabeled = run("estimate configs 2 --unlabeled");
  CHECK(unlabeled.out.find("configurations=10") != std::string::npos);

  const RunResult time = run("estimate time 15");
  CHECK(time.exit_code == 0);
  CHECK(time.out.find("seconds=7.269") != std::string::npos);
  CHECK(time.out.find("hours=2.019") != std::string::npos);

  const RunResult matched = run("estimate time 1 --rate-hz 1");
  CHECK(matched.out.find("seconds=1") != std::string::npos);

  const RunResult distill = run("estimate distillation");
  CHECK(distill.exit_code == 0);
  CHECK(distill.out.find("n_qubits=113") != std::string::npos);
  CHECK(distill.out.find("total_optimal=177") != std::string::npos);
  CHECK(distill.out.find("worst_case_patches=3616") != std::string::npos);
  CHECK(distill.out.find("ratio=20.4") != std::string::npos);
}

TEST_CASE("render outputs ascii and svg deterministically") {
  const fs::path circuit = work_dir() / "render.circuit";
  spit(circuit, "qubits 5\ncnot 0 1 2 3 4\n");
  const fs::path layout = work_dir() / "render.layout";
  REQUIRE(run("solve " + circuit.string() + " -o " + layout.string())
              .exit_code == 0);

  const RunResult ascii = run("render " + layout.string());
  CHECK(ascii.exit_code == 0);
  CHECK(ascii.out == "a\na\na\na\na\n");

  const RunResult svg1 =
      run("render " + layout.string() + " --format svg --cell-size 16");
  const RunResult svg2 =
      run("render " + layout.string() + " --format svg --cell-size 16");
  CHECK(svg1.exit_code == 0);
  CHECK(svg1.out == svg2.out);
  CHECK(svg1.out.find("<svg") != std::string::npos);

  CHECK(run("render " + layout.string() + " --format svg --cell-size 2")
            .exit_code == 2);
}

TEST_CASE("LSPACK_SEED provides the default seed") {
  const fs::path circuit = work_dir() / "seeded.circuit";
  spit(circuit, "qubits 6\ncnot 0 1 2\ncnot 3 4 5\n");
  const fs::path l1 = work_dir() / "seeded1.layout";
  const fs::path l2 = work_dir() / "seeded2.layout";
  const std::string base = std::string(LSPACK_CLI_PATH) + " solve " +
                           circuit.string() + " --method anneal -o ";
  REQUIRE(std::system(("LSPACK_SEED=9 " + base + l1.string() + " 2>/dev/null")
                          .c_str()) != -1);
  REQUIRE(std::system(("LSPACK_SEED=9 " + base + l2.string() + " 2>/dev/null")
                          .c_str()) != -1);
  CHECK(slurp(l1) == slurp(l2));
}

TEST_CASE("solve accepts a width cap") {
  const fs::path circuit = work_dir() / "wide.circuit";
  spit(circuit, "qubits 6\ncnot 0 1 2\ncnot 3 4 5\n");
  const fs::path layout = work_dir() / "wide.layout";
  const RunResult capped = run("solve " + circuit.string() +
                               " --max-width 1 -o " + layout.string());
  CHECK(capped.exit_code == 0);
  const lspack::Layout l = lspack::parse_layout(slurp(layout));
  CHECK(lspack::bounding_box(l).width() == 1);

  // a recurring qubit in three boxes cannot fit two columns
  const fs::path shared = work_dir() / "shared.circuit";
  spit(shared, "qubits 4\ncnot 0 3\ncnot 1 3\ncnot 2 3\n");
  CHECK(run("solve " + shared.string() + " --max-width 2").exit_code == 2);
}

TEST_CASE("unknown flags and missing subcommands exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("translate").exit_code == 2);
  CHECK(run("solve nonexistent.circuit --method warp").exit_code == 2);
}
