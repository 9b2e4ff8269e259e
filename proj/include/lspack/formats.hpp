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
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lspack/boxes.hpp"
#include "lspack/circuit.hpp"
#include "lspack/layout.hpp"
#include "lspack/reduction.hpp"
#include "lspack/solver.hpp"

namespace lspack {

/// Error in a line-oriented input file, with its 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::string raw;  // after comment stripping and trimming
};

// Splits text into lines, drops '#' comments and blank lines.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(pos, end - pos));
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream ss(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    line.raw = raw;
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

inline long long parse_int(const std::string& tok, int line_no,
                           const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected integer for ") + what +
                                  ", got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(line_no, std::string("trailing characters after ") +
                                  what + " in '" + tok + "'");
  }
  return value;
}

inline std::uint32_t parse_u32(const std::string& tok, int line_no,
                               const char* what) {
  const long long v = parse_int(tok, line_no, what);
  if (v < 0 || v > 0xffffffffll) {
    throw ParseError(line_no,
                     std::string(what) + " out of range: '" + tok + "'");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace detail

/// Parses the circuit file format:
///   qubits <N>
///   cnot <control> <target> [<target> ...]
///   init <q> <+|0>
///   measure <q> <X|Z|Y|A>
///   label <q> <text>
/// '#' starts a comment. init/measure/label lines are retained as qubit
/// annotations and produce no gates. A cnot line without targets is accepted
/// as the degenerate one-patch gate.
inline Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  for (const detail::Line& line : detail::content_lines(text)) {
    const std::string& kw = line.tokens[0];
    if (!have_header) {
      if (kw != "qubits") {
        throw ParseError(line.number, "expected 'qubits <N>' first, got '" +
                                          kw + "'");
      }
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "qubits line takes one count");
      }
      c.qubit_count = detail::parse_u32(line.tokens[1], line.number,
                                        "qubit count");
      if (c.qubit_count == 0) {
        throw ParseError(line.number, "qubit count must be positive");
      }
      have_header = true;
      continue;
    }
    auto qubit_arg = [&](std::size_t idx, const char* what) {
      const std::uint32_t q =
          detail::parse_u32(line.tokens[idx], line.number, what);
      if (q >= c.qubit_count) {
        throw ParseError(line.number, std::string(what) + " " +
                                          std::to_string(q) +
                                          " out of range, circuit has " +
                                          std::to_string(c.qubit_count) +
                                          " qubits");
      }
      return q;
    };
    if (kw == "cnot") {
      if (line.tokens.size() < 2) {
        throw ParseError(line.number, "cnot line needs a control");
      }
      Cnot gate;
      gate.control = qubit_arg(1, "control qubit");
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        const QubitId t = qubit_arg(i, "target qubit");
        if (t == gate.control) {
          throw ParseError(line.number, "control qubit " + std::to_string(t) +
                                            " appears in targets");
        }
        for (QubitId u : gate.targets) {
          if (u == t) {
            throw ParseError(line.number,
                             "duplicate target " + std::to_string(t));
          }
        }
        gate.targets.push_back(t);
      }
      c.gates.push_back(std::move(gate));
    } else if (kw == "init") {
      if (line.tokens.size() != 3 ||
          (line.tokens[2] != "+" && line.tokens[2] != "0")) {
        throw ParseError(line.number, "expected 'init <q> <+|0>'");
      }
      c.labels[qubit_arg(1, "qubit")].push_back("init " + line.tokens[2]);
    } else if (kw == "measure") {
      static constexpr std::string_view bases[] = {"X", "Z", "Y", "A"};
      const bool known =
          line.tokens.size() == 3 &&
          std::find(std::begin(bases), std::end(bases), line.tokens[2]) !=
              std::end(bases);
      if (!known) {
        throw ParseError(line.number, "expected 'measure <q> <X|Z|Y|A>'");
      }
      c.labels[qubit_arg(1, "qubit")].push_back("measure " + line.tokens[2]);
    } else if (kw == "label") {
      if (line.tokens.size() < 3) {
        throw ParseError(line.number, "expected 'label <q> <text>'");
      }
      std::string text;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        if (i > 2) text += " ";
        text += line.tokens[i];
      }
      c.labels[qubit_arg(1, "qubit")].push_back(std::move(text));
    } else {
      throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
  }
  if (!have_header) {
    throw ParseError(1, "missing 'qubits <N>' header");
  }
  return c;
}

inline std::string write_circuit(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.qubit_count) + "\n";
  for (const auto& [q, notes] : c.labels) {
    for (const std::string& note : notes) {
      if (note.rfind("init ", 0) == 0) {
        out += "init " + std::to_string(q) + " " + note.substr(5) + "\n";
      }
    }
  }
  for (const Cnot& g : c.gates) {
    out += "cnot " + std::to_string(g.control);
    for (QubitId t : g.targets) out += " " + std::to_string(t);
    out += "\n";
  }
  for (const auto& [q, notes] : c.labels) {
    for (const std::string& note : notes) {
      if (note.rfind("measure ", 0) == 0) {
        out += "measure " + std::to_string(q) + " " + note.substr(8) + "\n";
      } else if (note.rfind("init ", 0) != 0) {
        out += "label " + std::to_string(q) + " " + note + "\n";
      }
    }
  }
  return out;
}

/// Parses the layout file format:
///   layout <width> <height>
///   patch <col> <row> <box_id> <qubit>
/// Patch order is irrelevant; the header dimensions are informational.
inline Layout parse_layout(std::string_view text) {
  std::vector<Patch> patches;
  bool have_header = false;
  for (const detail::Line& line : detail::content_lines(text)) {
    const std::string& kw = line.tokens[0];
    if (!have_header) {
      if (kw != "layout" || line.tokens.size() != 3) {
        throw ParseError(line.number, "expected 'layout <width> <height>' first");
      }
      detail::parse_u32(line.tokens[1], line.number, "width");
      detail::parse_u32(line.tokens[2], line.number, "height");
      have_header = true;
      continue;
    }
    if (kw != "patch" || line.tokens.size() != 5) {
      throw ParseError(line.number,
                       "expected 'patch <col> <row> <box_id> <qubit>'");
    }
    Patch p;
    p.cell.col = static_cast<int>(
        detail::parse_int(line.tokens[1], line.number, "column"));
    p.cell.row = static_cast<int>(
        detail::parse_int(line.tokens[2], line.number, "row"));
    p.box = static_cast<BoxId>(
        detail::parse_u32(line.tokens[3], line.number, "box id"));
    p.qubit = detail::parse_u32(line.tokens[4], line.number, "qubit");
    patches.push_back(p);
  }
  if (!have_header) {
    throw ParseError(1, "missing 'layout <width> <height>' header");
  }
  return Layout(std::move(patches));
}

inline std::string write_layout(const Layout& l) {
  int width = 0;
  int height = 0;
  if (!l.empty()) {
    const BoundingBox bb = bounding_box(l);
    width = bb.width();
    height = bb.height();
  }
  std::string out =
      "layout " + std::to_string(width) + " " + std::to_string(height) + "\n";
  std::vector<Patch> sorted = l.patches();
  std::sort(sorted.begin(), sorted.end());
  for (const Patch& p : sorted) {
    out += "patch " + std::to_string(p.cell.col) + " " +
           std::to_string(p.cell.row) + " " + std::to_string(p.box) + " " +
           std::to_string(p.qubit) + "\n";
  }
  return out;
}

/// Layout plus the solver stats trailer.
inline std::string write_solve_result(const SolveResult& res) {
  std::string out = write_layout(res.layout);
  out += "# area=" + std::to_string(res.area) +
         " proven_optimal=" + std::to_string(res.proven_optimal ? 1 : 0) +
         " nodes=" + std::to_string(res.nodes_explored) + "\n";
  return out;
}

/// Parses the 3-partition instance format:
///   3partition s=<s> L=<L> strict=<0|1>
///   a <value>          (3s lines)
inline ThreePartitionInstance parse_instance(std::string_view text) {
  ThreePartitionInstance inst;
  bool have_header = false;
  int header_line = 1;
  for (const detail::Line& line : detail::content_lines(text)) {
    const std::string& kw = line.tokens[0];
    if (!have_header) {
      if (kw != "3partition" || line.tokens.size() != 4) {
        throw ParseError(line.number,
                         "expected '3partition s=<s> L=<L> strict=<0|1>' first");
      }
      auto keyed = [&](std::size_t idx, const std::string& key) {
        const std::string& tok = line.tokens[idx];
        if (tok.rfind(key + "=", 0) != 0) {
          throw ParseError(line.number, "expected '" + key + "=<value>', got '" +
                                            tok + "'");
        }
        return detail::parse_u32(tok.substr(key.size() + 1), line.number,
                                 key.c_str());
      };
      inst.s = keyed(1, "s");
      inst.L = keyed(2, "L");
      const std::uint32_t strict = keyed(3, "strict");
      if (strict > 1) {
        throw ParseError(line.number, "strict must be 0 or 1");
      }
      inst.strict_bounds = strict == 1;
      have_header = true;
      header_line = line.number;
      continue;
    }
    if (kw != "a" || line.tokens.size() != 2) {
      throw ParseError(line.number, "expected 'a <value>'");
    }
    inst.values.push_back(
        detail::parse_u32(line.tokens[1], line.number, "value"));
  }
  if (!have_header) {
    throw ParseError(1, "missing '3partition' header");
  }
  if (inst.values.size() != static_cast<std::size_t>(3) * inst.s) {
    throw ParseError(header_line,
                     "expected " + std::to_string(3 * inst.s) +
                         " 'a' lines, got " + std::to_string(inst.values.size()));
  }
  return inst;
}

inline std::string write_instance(const ThreePartitionInstance& inst) {
  std::string out = "3partition s=" + std::to_string(inst.s) +
                    " L=" + std::to_string(inst.L) +
                    " strict=" + std::to_string(inst.strict_bounds ? 1 : 0) +
                    "\n";
  for (std::uint32_t a : inst.values) {
    out += "a " + std::to_string(a) + "\n";
  }
  return out;
}

}  // namespace lspack
