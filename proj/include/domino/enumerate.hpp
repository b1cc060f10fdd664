#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "domino/board.hpp"

namespace domino {

// Safety bound for explicit enumeration.
struct EnumerationCap {
  std::uint64_t max_tilings = 1'000'000;
};

// Largest board the counting DP accepts: rows*cols <= kOracleAreaBound and
// cols <= kOracleMaxCols (the broken profile is a (cols+1)-bit mask).
constexpr int kOracleAreaBound = 256;
constexpr int kOracleMaxCols = 20;

// Exact tiling count by broken-profile dynamic programming, scanning cells in
// row-major order. Odd-area boards count 0. Throws AreaTooLargeError beyond
// the bounds above.
mpz_class count_tilings_oracle(BoardDims dims);

// Depth-first exact-cover enumeration, one call per tiling in a fixed order:
// the lowest uncovered cell (row-major from the bottom-left) is covered
// first, Horizontal before Vertical. Return false from the visitor to stop.
void for_each_tiling(BoardDims dims,
                     const std::function<bool(const Tiling&)>& visit);

// Collects the full stream; throws CapExceededError when the oracle count
// exceeds the cap (checked up front).
std::vector<Tiling> enumerate_tilings(BoardDims dims, EnumerationCap cap);

}  // namespace domino
