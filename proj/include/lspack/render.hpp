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

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lspack/layout.hpp"

namespace lspack {

enum class RenderFormat { ascii, svg };

struct RenderOptions {
  RenderFormat format = RenderFormat::ascii;
  int cell_size_px = 24;  // svg only, at least 4
  bool show_box_ids = false;
};

/// Glyph of a box in the ascii rendering: a-z, A-Z, 0-9 cycling by id.
inline char box_glyph(BoxId id) {
  static constexpr std::string_view glyphs =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  return glyphs[static_cast<std::size_t>(id) % glyphs.size()];
}

/// One character per cell inside the bounding box, '.' for empty cells,
/// one line per row. Identical bytes for identical input.
inline std::string render_ascii(const Layout& l, const RenderOptions& = {}) {
  if (l.empty()) return "";
  const BoundingBox bb = bounding_box(l);
  std::string out;
  out.reserve(static_cast<std::size_t>(bb.area()) + bb.height());
  for (int row = bb.min_row; row <= bb.max_row; ++row) {
    for (int col = bb.min_col; col <= bb.max_col; ++col) {
      auto p = l.at(Cell{col, row});
      out.push_back(p ? box_glyph(p->box) : '.');
    }
    out.push_back('\n');
  }
  return out;
}

namespace detail {

inline constexpr std::array<std::string_view, 16> kPatchPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
    "#a0cbe8", "#ffbe7d", "#8cd17d", "#d4a6c8"};

}  // namespace detail

/// One rectangle per patch, colored by box id, with the qubit id as text
/// (prefixed by the box id when show_box_ids is set). Integer geometry only,
/// so output bytes are identical across platforms.
inline std::string render_svg(const Layout& l, const RenderOptions& opts = {}) {
  if (opts.cell_size_px < 4) {
    throw std::invalid_argument("render_svg: cell size must be at least 4");
  }
  const int cell = opts.cell_size_px;
  int width = 0;
  int height = 0;
  int min_col = 0;
  int min_row = 0;
  if (!l.empty()) {
    const BoundingBox bb = bounding_box(l);
    width = bb.width() * cell;
    height = bb.height() * cell;
    min_col = bb.min_col;
    min_row = bb.min_row;
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";

  std::vector<Patch> sorted = l.patches();
  std::sort(sorted.begin(), sorted.end());
  const int font = std::max(1, (2 * cell) / 5);
  for (const Patch& p : sorted) {
    const int x = (p.cell.col - min_col) * cell;
    const int y = (p.cell.row - min_row) * cell;
    const std::string_view fill =
        detail::kPatchPalette[static_cast<std::size_t>(p.box) %
                              detail::kPatchPalette.size()];
    out += "  <rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" width=\"" + std::to_string(cell) + "\" height=\"" +
           std::to_string(cell) + "\" fill=\"" + std::string(fill) +
           "\" stroke=\"#333333\"/>\n";
    std::string text = opts.show_box_ids
                           ? std::to_string(p.box) + ":" + std::to_string(p.qubit)
                           : std::to_string(p.qubit);
    out += "  <text x=\"" + std::to_string(x + cell / 2) + "\" y=\"" +
           std::to_string(y + cell / 2) + "\" font-size=\"" +
           std::to_string(font) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\">" + text +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

inline std::string render(const Layout& l, const RenderOptions& opts) {
  return opts.format == RenderFormat::svg ? render_svg(l, opts)
                                          : render_ascii(l, opts);
}

}  // namespace lspack
