#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "domino/errors.hpp"

namespace domino {

// Dense square matrix of arbitrary-precision integers.
class BigMatrix {
 public:
  explicit BigMatrix(int dim)
      : dim_(dim), cells_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 1) throw Error("matrix dimension must be positive");
  }

  static BigMatrix identity(int dim);

  int dim() const { return dim_; }
  mpz_class& at(int i, int j) { return cells_[index(i, j)]; }
  const mpz_class& at(int i, int j) const { return cells_[index(i, j)]; }

  BigMatrix multiply(const BigMatrix& rhs) const;
  bool is_zero() const;

  bool operator==(const BigMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
      throw IndexOutOfRangeError("matrix index (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") out of range for dim " +
                                 std::to_string(dim_));
    return static_cast<std::size_t>(i) * dim_ + j;
  }

  int dim_;
  std::vector<mpz_class> cells_;
};

struct PowerStats {
  std::uint64_t multiplications = 0;
};

// M^n by binary repeated squaring; for n >= 1 the multiplication count lies
// in [floor(log2 n), 2*floor(log2 n)].
BigMatrix matrix_power(const BigMatrix& m, std::uint64_t n,
                       PowerStats* stats = nullptr);
mpz_class matrix_power_entry(const BigMatrix& m, std::uint64_t n, int i, int j,
                             PowerStats* stats = nullptr);

// Fraction-free (Bareiss) determinant; exact.
mpz_class determinant(const BigMatrix& m);

constexpr int kMaxProfileWidth = 12;

// Column transfer matrix for width-w strips: entry(a, b) is the number of
// ways to complete one column whose cells in the incoming protrusion set `a`
// are already covered, using vertical dominoes inside the column and
// horizontal dominoes protruding into the next column's set `b`. Entries are
// 0 or 1: fixed (a, b) leaves the free cells to an even-run vertical fill,
// which is unique when it exists. Rows are stored as sorted successor lists.
class ProfileMatrix {
 public:
  int width() const { return width_; }
  int size() const { return 1 << width_; }

  std::uint32_t entry(int incoming, int outgoing) const;
  const std::vector<std::uint32_t>& successors(int incoming) const {
    return rows_[static_cast<std::size_t>(incoming)];
  }

  BigMatrix to_big_matrix() const;

  friend ProfileMatrix build_column_transfer(int width);

 private:
  explicit ProfileMatrix(int width) : width_(width) {}

  int width_ = 0;
  std::vector<std::vector<std::uint32_t>> rows_;
};

// Throws WidthTooLargeError outside 1..kMaxProfileWidth.
ProfileMatrix build_column_transfer(int width);

// Exact tiling count of a width x cols board as (T^cols)[empty][empty],
// evaluated by column-vector iteration.
mpz_class count_via_transfer(int width, int cols);

// 20x20 symmetric nonnegative-integer matrix whose n-th power's top-left
// entry counts the tilings of a 6 x 2n board.
class CompactMatrix {
 public:
  static constexpr int kDim = 20;

  int at(int i, int j) const { return entries_[check(i)][check(j)]; }
  void set(int i, int j, int v) { entries_[check(i)][check(j)] = v; }

  bool is_symmetric() const;
  long trace() const;
  BigMatrix to_big_matrix() const;

  bool operator==(const CompactMatrix&) const = default;

 private:
  static int check(int i) {
    if (i < 0 || i >= kDim)
      throw IndexOutOfRangeError("compact matrix index out of range");
    return i;
  }

  std::array<std::array<int, kDim>, kDim> entries_{};
};

// The built-in compact matrix (same data as the shipped fixture asset).
CompactMatrix compact_matrix();

// Versioned text fixture: header line, 20 rows of 20 integers, trailing
// checksum line. Loaders reject malformed or corrupted fixtures.
std::string compact_matrix_to_fixture(const CompactMatrix& c);
CompactMatrix compact_matrix_from_fixture(const std::string& text);
CompactMatrix load_compact_matrix(const std::string& path);

struct VerifyReport {
  bool ok = true;
  int first_mismatch = -1;      // n of the first failing power, -1 if none
  std::string expected;         // decimal, only on mismatch
  std::string actual;
  int checked = 0;
};

// Checks (C^n)[0][0] == count_via_transfer(6, 2n) for n = 1..max_index.
VerifyReport verify_compact(const CompactMatrix& c, int max_index);

}  // namespace domino
