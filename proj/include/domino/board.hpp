#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "domino/errors.hpp"

namespace domino {

// Cell coordinates are 0-based with the origin at the bottom-left:
// row grows north, col grows east. Lattice vertices use the same frame,
// x in 0..cols and y in 0..rows.

struct BoardDims {
  int rows = 0;
  int cols = 0;

  int area() const { return rows * cols; }
  bool even_area() const { return area() % 2 == 0; }
  bool both_even() const { return rows % 2 == 0 && cols % 2 == 0; }

  auto operator<=>(const BoardDims&) const = default;
};

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

enum class Orientation : std::uint8_t { Horizontal, Vertical };

struct Domino {
  Cell anchor;  // lower/left of the two covered cells
  Orientation orientation = Orientation::Horizontal;

  Cell second() const {
    return orientation == Orientation::Horizontal
               ? Cell{anchor.row, anchor.col + 1}
               : Cell{anchor.row + 1, anchor.col};
  }

  auto operator<=>(const Domino&) const = default;
};

inline Domino horizontal_at(int row, int col) {
  return Domino{{row, col}, Orientation::Horizontal};
}
inline Domino vertical_at(int row, int col) {
  return Domino{{row, col}, Orientation::Vertical};
}

struct GridVertex {
  int x = 0;
  int y = 0;
  auto operator<=>(const GridVertex&) const = default;
};

// Unit axis-parallel lattice edge; `a` is the lower/left endpoint.
struct GridEdge {
  GridVertex a;
  GridVertex b;
  auto operator<=>(const GridEdge&) const = default;
};

enum class Axis : std::uint8_t { Horizontal, Vertical };

// Full-span grid line at `index` (1..rows-1 horizontal, 1..cols-1 vertical)
// crossed by no domino of the associated tiling.
struct FaultLine {
  Axis axis = Axis::Horizontal;
  int index = 0;
  auto operator<=>(const FaultLine&) const = default;
};

struct GridPath {
  std::vector<GridVertex> vertices;
  bool operator==(const GridPath&) const = default;
};

// Both variants run odd vertical lattice lines (leftmost first) north and
// even ones south. A connects bottom-left to top-right with the bottom
// horizontal line eastbound; B connects bottom-right to top-left with the
// horizontal orientations flipped.
enum class PathVariant : std::uint8_t { A, B };

// An exact cover of the board by dominoes. Instances are only produced by
// validate_tiling / tiling_from_text, so every Tiling in flight is valid and
// canonically sorted by (anchor, orientation). Immutable after construction.
class Tiling {
 public:
  const BoardDims& dims() const { return dims_; }
  const std::vector<Domino>& dominoes() const { return dominoes_; }

  bool operator==(const Tiling&) const = default;

  friend Tiling validate_tiling(BoardDims dims, std::vector<Domino> dominoes);

 private:
  Tiling(BoardDims dims, std::vector<Domino> dominoes)
      : dims_(dims), dominoes_(std::move(dominoes)) {}

  BoardDims dims_;
  std::vector<Domino> dominoes_;
};

// Checks the exact-cover invariant; throws OutOfBoundsError, OverlapError or
// GapError (first offending cell in row-major order from the bottom-left).
Tiling validate_tiling(BoardDims dims, std::vector<Domino> dominoes);

// The unit lattice edge separating the domino's two cells.
GridEdge bisecting_edge(const Domino& d);

// Letter-grid text form, one line per board row printed top row first,
// newline-terminated. Two equal adjacent letters form one domino.
std::string tiling_to_text(const Tiling& t);
Tiling tiling_from_text(const std::string& text);

// Canonical JSON forms for the path/fault artifacts.
std::string fault_line_to_json(const FaultLine& f);
std::string fault_lines_to_json(const std::vector<FaultLine>& fs);
std::string grid_path_to_json(const GridPath& p);

}  // namespace domino
