#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domino/board.hpp"

namespace domino {

struct RenderOptions {
  int cell_size = 40;  // pixels, >= 8
  bool show_fault_lines = false;
  bool show_path = false;
  bool show_orientations = false;
};

// Letter grid; with a path, an expanded lattice view with the path overlaid
// as +, | and - glyphs on the vertex lattice.
std::string render_ascii(const Tiling& t, const GridPath* path = nullptr);

// Deterministic SVG 1.1 document: one rounded <rect> per domino, one dashed
// <line> per fault line, one <polyline> for the path. All geometry is
// integral, so identical inputs yield identical bytes.
std::string render_svg(const Tiling& t, const GridPath* path,
                       const std::vector<FaultLine>* faults,
                       const RenderOptions& opts = {});

}  // namespace domino
