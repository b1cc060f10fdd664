#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace domino {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- board-core ----

struct OverlapError : Error {
  int row, col;
  OverlapError(int r, int c)
      : Error("cell (" + std::to_string(r) + "," + std::to_string(c) +
              ") covered twice"),
        row(r), col(c) {}
};

struct GapError : Error {
  int row, col;
  GapError(int r, int c)
      : Error("cell (" + std::to_string(r) + "," + std::to_string(c) +
              ") left uncovered"),
        row(r), col(c) {}
};

struct OutOfBoundsError : Error {
  int row, col;
  OutOfBoundsError(int r, int c)
      : Error("domino anchored at (" + std::to_string(r) + "," +
              std::to_string(c) + ") leaves the board"),
        row(r), col(c) {}
};

struct ParseError : Error {
  int line, column;  // 1-based, in printed (top-down) order
  ParseError(int l, int c, const std::string& what)
      : Error("parse error at line " + std::to_string(l) + ", column " +
              std::to_string(c) + ": " + what),
        line(l), column(c) {}
};

// ---- enumerate ----

struct AreaTooLargeError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  std::uint64_t cap;
  explicit CapExceededError(std::uint64_t cap_, const std::string& count)
      : Error("board has " + count + " tilings, cap is " +
              std::to_string(cap_)),
        cap(cap_) {}
};

// ---- kasteleyn ----

struct PrecisionExhaustedError : Error {
  unsigned max_bits;
  explicit PrecisionExhaustedError(unsigned bits)
      : Error("no unique integer in the enclosure at " + std::to_string(bits) +
              " bits"),
        max_bits(bits) {}
};

// ---- transfer ----

struct WidthTooLargeError : Error {
  using Error::Error;
};

struct IndexOutOfRangeError : Error {
  using Error::Error;
};

struct FixtureError : Error {
  using Error::Error;
};

// ---- series ----

struct NotExpandableError : Error {
  using Error::Error;
};

struct SeedTooShortError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// ---- paths ----

struct OddDimensionsError : Error {
  using Error::Error;
};

struct SearchExhaustedError : Error {
  std::uint64_t budget;
  explicit SearchExhaustedError(std::uint64_t b)
      : Error("search budget of " + std::to_string(b) +
              " node expansions exhausted"),
        budget(b) {}
};

struct BisectedDominoError : Error {
  int row, col;
  BisectedDominoError(int r, int c)
      : Error("path bisects the domino anchored at (" + std::to_string(r) +
              "," + std::to_string(c) + ")"),
        row(r), col(c) {}
};

}  // namespace domino
