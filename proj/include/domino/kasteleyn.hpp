#pragma once

#include <gmpxx.h>

#include "domino/errors.hpp"

namespace domino {

// Board is (2r) x (2n); r = half_rows, n = half_cols.
struct KasteleynParams {
  int half_rows = 1;
  int half_cols = 1;
};

struct PrecisionConfig {
  unsigned initial_bits = 64;
  unsigned max_bits = 1u << 20;
};

// Enclosure with exact (dyadic) rational endpoints, lo <= true value <= hi.
struct RationalInterval {
  mpq_class lo;
  mpq_class hi;

  bool contains(const mpz_class& v) const { return lo <= v && v <= hi; }
  mpq_class width() const { return hi - lo; }
};

// Rigorous enclosure of the trigonometric product
//   prod_{m=1..r} prod_{k=1..n} (4 cos^2(m pi/(2r+1)) + 4 cos^2(k pi/(2n+1)))
// evaluated with directed rounding at the given mantissa width (>= 64).
// Factors are combined in index order.
RationalInterval kasteleyn_product_interval(KasteleynParams p, unsigned bits);

// Doubles the working precision from cfg.initial_bits until the enclosure
// contains exactly one integer, and returns it. Throws
// PrecisionExhaustedError past cfg.max_bits.
mpz_class kasteleyn_count(KasteleynParams p, PrecisionConfig cfg = {});

}  // namespace domino
