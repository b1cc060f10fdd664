#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domino/board.hpp"

namespace domino {

// Lattice with one allowed traversal direction per unit edge: vertical line
// x runs north iff x is even; horizontal line y runs east iff y is even
// (Variant A) or iff y is odd (Variant B). Bisecting edges of the tiling are
// removed entirely.
class DirectedGrid {
 public:
  DirectedGrid(const Tiling& t, PathVariant v);

  const BoardDims& dims() const { return dims_; }
  PathVariant variant() const { return variant_; }

  bool vertical_edge_removed(int x, int y) const {  // (x,y)-(x,y+1)
    return vertical_removed_[vertical_index(x, y)];
  }
  bool horizontal_edge_removed(int x, int y) const {  // (x,y)-(x+1,y)
    return horizontal_removed_[horizontal_index(x, y)];
  }
  std::size_t removed_edge_count() const { return removed_count_; }

  // Single legal traversal test for the unit step from -> to (adjacency,
  // bounds, orientation and removal all checked).
  bool step_allowed(const GridVertex& from, const GridVertex& to) const;

 private:
  std::size_t vertical_index(int x, int y) const {
    return static_cast<std::size_t>(x) * dims_.rows +
           static_cast<std::size_t>(y);
  }
  std::size_t horizontal_index(int x, int y) const {
    return static_cast<std::size_t>(y) * dims_.cols +
           static_cast<std::size_t>(x);
  }

  BoardDims dims_;
  PathVariant variant_;
  std::vector<bool> vertical_removed_;    // (cols+1) x rows
  std::vector<bool> horizontal_removed_;  // cols x (rows+1)
  std::size_t removed_count_ = 0;
};

// Requires even rows and cols (OddDimensionsError otherwise).
DirectedGrid build_directed_grid(const Tiling& t, PathVariant v);

// All interior full-span grid lines crossed by no domino, horizontal lines
// first, each axis in ascending index order.
std::vector<FaultLine> find_fault_lines(const Tiling& t);

struct SearchStats {
  std::uint64_t expansions = 0;
  unsigned solutions = 0;
};

constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// First corner-to-corner Hamiltonian path respecting the directed grid,
// found by deterministic backtracking (neighbour order North, East, South,
// West). nullopt means the exhausted search proved absence; running out of
// budget throws SearchExhaustedError instead.
std::optional<GridPath> hamiltonian_path(
    const Tiling& t, PathVariant v,
    std::uint64_t budget = kDefaultSearchBudget, SearchStats* stats = nullptr);

// Number of such paths, counted up to `limit` (used for uniqueness checks).
unsigned count_hamiltonian_paths(const Tiling& t, PathVariant v,
                                 std::uint64_t budget, unsigned limit,
                                 SearchStats* stats = nullptr);

// Independent checker for the hamiltonian_path postconditions: corner
// endpoints for the variant, every vertex exactly once, unit steps, allowed
// directions, no bisecting edge. Reconstructs the constraints from the
// tiling itself. On failure `why` (when given) names the first violation.
bool is_valid_traffic_path(const Tiling& t, PathVariant v, const GridPath& p,
                           std::string* why = nullptr);

// Dominoes grouped by which side of the directed path their cells lie on.
// The faces of the cell graph minus the path's edges are labelled left (0)
// or right (1) by walking the path; a stretch hugging the board boundary can
// pinch off several faces, so faces are merged per side rather than reported
// raw. Sides with no cells are omitted.
struct SidePartition {
  std::vector<std::pair<int, int>> groups;  // (side id, domino count)

  int total_dominoes() const {
    int s = 0;
    for (auto& [id, n] : groups) s += n;
    return s;
  }
};

// Throws BisectedDominoError if the path runs through a domino (cannot
// happen for paths produced by hamiltonian_path).
SidePartition side_partition(const Tiling& t, const GridPath& p);

// Left-right mirror image; maps Variant A solutions onto Variant B
// solutions of the mirrored tiling.
Tiling reflect_horizontal(const Tiling& t);
GridPath reflect_horizontal(const GridPath& p, int cols);

}  // namespace domino
