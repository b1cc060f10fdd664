#include "domino/enumerate.hpp"

#include <algorithm>

namespace domino {

mpz_class count_tilings_oracle(BoardDims dims) {
  if (dims.rows < 1 || dims.cols < 1)
    throw Error("board dimensions must be positive");
  if (dims.area() > kOracleAreaBound)
    throw AreaTooLargeError("board area " + std::to_string(dims.area()) +
                            " exceeds the oracle bound " +
                            std::to_string(kOracleAreaBound));
  if (dims.cols > kOracleMaxCols)
    throw AreaTooLargeError("board width " + std::to_string(dims.cols) +
                            " exceeds the oracle profile width " +
                            std::to_string(kOracleMaxCols));
  if (!dims.even_area()) return 0;

  const int cols = dims.cols;
  const std::uint32_t states = 1u << cols;
  const std::uint32_t high_bit = 1u << (cols - 1);

  // dp[mask]: ways to reach the current cell with mask describing coverage of
  // the next `cols` cells in scan order (bit 0 = the current cell).
  std::vector<mpz_class> dp(states), next(states);
  dp[0] = 1;
  for (int row = 0; row < dims.rows; ++row) {
    for (int col = 0; col < cols; ++col) {
      for (auto& v : next) v = 0;
      for (std::uint32_t mask = 0; mask < states; ++mask) {
        const mpz_class& ways = dp[mask];
        if (ways == 0) continue;
        if (mask & 1u) {
          next[mask >> 1] += ways;  // already covered, advance
        } else {
          if (col + 1 < cols && !(mask & 2u))
            next[((mask | 2u) >> 1)] += ways;  // horizontal
          if (row + 1 < dims.rows)
            next[(mask >> 1) | high_bit] += ways;  // vertical
        }
      }
      dp.swap(next);
    }
  }
  return dp[0];
}

namespace {

struct EnumerationState {
  BoardDims dims;
  std::vector<char> covered;
  std::vector<Domino> placed;
  const std::function<bool(const Tiling&)>* visit = nullptr;
  bool stopped = false;

  int index(int row, int col) const { return row * dims.cols + col; }

  // `from` is the lowest cell index that might still be uncovered.
  void extend(int from) {
    if (stopped) return;
    int i = from;
    const int total = dims.area();
    while (i < total && covered[i]) ++i;
    if (i == total) {
      Tiling t = validate_tiling(dims, placed);
      if (!(*visit)(t)) stopped = true;
      return;
    }
    const int row = i / dims.cols;
    const int col = i % dims.cols;
    if (col + 1 < dims.cols && !covered[i + 1]) {
      covered[i] = covered[i + 1] = 1;
      placed.push_back(horizontal_at(row, col));
      extend(i + 2);
      placed.pop_back();
      covered[i] = covered[i + 1] = 0;
    }
    if (row + 1 < dims.rows) {
      covered[i] = covered[i + dims.cols] = 1;
      placed.push_back(vertical_at(row, col));
      extend(i + 1);
      placed.pop_back();
      covered[i] = covered[i + dims.cols] = 0;
    }
  }
};

}  // namespace

void for_each_tiling(BoardDims dims,
                     const std::function<bool(const Tiling&)>& visit) {
  if (dims.rows < 1 || dims.cols < 1)
    throw Error("board dimensions must be positive");
  if (!dims.even_area()) return;  // empty stream
  EnumerationState st;
  st.dims = dims;
  st.covered.assign(static_cast<std::size_t>(dims.area()), 0);
  st.placed.reserve(static_cast<std::size_t>(dims.area() / 2));
  st.visit = &visit;
  st.extend(0);
}

std::vector<Tiling> enumerate_tilings(BoardDims dims, EnumerationCap cap) {
  if (cap.max_tilings < 1) throw Error("cap must be at least 1");
  mpz_class count = count_tilings_oracle(dims);
  if (count > cap.max_tilings)
    throw CapExceededError(cap.max_tilings, count.get_str());
  std::vector<Tiling> out;
  out.reserve(count.get_ui());
  for_each_tiling(dims, [&](const Tiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace domino
