#include "domino/kasteleyn.hpp"

#include <mpfr.h>

#include <utility>
#include <vector>

namespace domino {

namespace {

// Minimal RAII wrapper over mpfr_t; all arithmetic goes through explicitly
// rounded calls at the call site.
class Fp {
 public:
  explicit Fp(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  Fp(const Fp& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Fp& operator=(const Fp& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Fp() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Interval {
  Fp lo;
  Fp hi;
  explicit Interval(mpfr_prec_t bits) : lo(bits), hi(bits) {}
};

// Enclosure of 4 cos^2(j pi / q) for angles inside [0, pi/2).
Interval four_cos_sq(long j, long q, mpfr_prec_t bits, const Interval& pi) {
  Interval theta(bits);
  mpfr_mul_si(theta.lo.get(), pi.lo.get(), j, MPFR_RNDD);
  mpfr_div_si(theta.lo.get(), theta.lo.get(), q, MPFR_RNDD);
  mpfr_mul_si(theta.hi.get(), pi.hi.get(), j, MPFR_RNDU);
  mpfr_div_si(theta.hi.get(), theta.hi.get(), q, MPFR_RNDU);

  // cos is decreasing on [0, pi]; the angle j*pi/q with 2j < q stays below
  // pi/2, so a bound of 2 leaves ample rounding slack.
  if (mpfr_cmp_si(theta.hi.get(), 2) > 0)
    throw Error("cosine argument escaped its monotone range");

  Interval c(bits);
  mpfr_cos(c.lo.get(), theta.hi.get(), MPFR_RNDD);
  mpfr_cos(c.hi.get(), theta.lo.get(), MPFR_RNDU);

  // Square, handling a lower endpoint pushed below zero by rounding.
  Interval sq(bits);
  if (mpfr_sgn(c.lo.get()) >= 0) {
    mpfr_sqr(sq.lo.get(), c.lo.get(), MPFR_RNDD);
    mpfr_sqr(sq.hi.get(), c.hi.get(), MPFR_RNDU);
  } else {
    mpfr_set_zero(sq.lo.get(), 1);
    Fp a(bits), b(bits);
    mpfr_sqr(a.get(), c.lo.get(), MPFR_RNDU);
    mpfr_sqr(b.get(), c.hi.get(), MPFR_RNDU);
    mpfr_max(sq.hi.get(), a.get(), b.get(), MPFR_RNDU);
  }
  mpfr_mul_si(sq.lo.get(), sq.lo.get(), 4, MPFR_RNDD);
  mpfr_mul_si(sq.hi.get(), sq.hi.get(), 4, MPFR_RNDU);
  return sq;
}

}  // namespace

RationalInterval kasteleyn_product_interval(KasteleynParams p, unsigned bits) {
  if (p.half_rows < 1 || p.half_cols < 1)
    throw Error("Kasteleyn parameters must be positive");
  if (bits < 64) throw Error("precision must be at least 64 bits");

  const auto prec = static_cast<mpfr_prec_t>(bits);
  Interval pi(prec);
  mpfr_const_pi(pi.lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi.hi.get(), MPFR_RNDU);

  const long r = p.half_rows, n = p.half_cols;
  std::vector<Interval> row_terms, col_terms;
  row_terms.reserve(static_cast<std::size_t>(r));
  col_terms.reserve(static_cast<std::size_t>(n));
  for (long m = 1; m <= r; ++m)
    row_terms.push_back(four_cos_sq(m, 2 * r + 1, prec, pi));
  for (long k = 1; k <= n; ++k)
    col_terms.push_back(four_cos_sq(k, 2 * n + 1, prec, pi));

  Interval acc(prec);
  mpfr_set_si(acc.lo.get(), 1, MPFR_RNDD);
  mpfr_set_si(acc.hi.get(), 1, MPFR_RNDU);
  Interval factor(prec);
  for (long m = 0; m < r; ++m) {
    for (long k = 0; k < n; ++k) {
      mpfr_add(factor.lo.get(), row_terms[m].lo.get(), col_terms[k].lo.get(),
               MPFR_RNDD);
      mpfr_add(factor.hi.get(), row_terms[m].hi.get(), col_terms[k].hi.get(),
               MPFR_RNDU);
      // All factors are positive, so endpoint products bound the product.
      mpfr_mul(acc.lo.get(), acc.lo.get(), factor.lo.get(), MPFR_RNDD);
      mpfr_mul(acc.hi.get(), acc.hi.get(), factor.hi.get(), MPFR_RNDU);
    }
  }
  if (mpfr_sgn(acc.lo.get()) < 0)
    mpfr_set_zero(acc.lo.get(), 1);  // counts are nonnegative

  RationalInterval out;
  mpfr_get_q(out.lo.get_mpq_t(), acc.lo.get());
  mpfr_get_q(out.hi.get_mpq_t(), acc.hi.get());
  return out;
}

mpz_class kasteleyn_count(KasteleynParams p, PrecisionConfig cfg) {
  if (cfg.initial_bits < 64) throw Error("initial_bits must be at least 64");
  if (cfg.initial_bits > cfg.max_bits)
    throw Error("initial_bits must not exceed max_bits");

  for (unsigned bits = cfg.initial_bits;; bits *= 2) {
    RationalInterval box = kasteleyn_product_interval(p, bits);
    mpz_class lo_ceil, hi_floor;
    mpz_cdiv_q(lo_ceil.get_mpz_t(), box.lo.get_num_mpz_t(),
               box.lo.get_den_mpz_t());
    mpz_fdiv_q(hi_floor.get_mpz_t(), box.hi.get_num_mpz_t(),
               box.hi.get_den_mpz_t());
    if (lo_ceil == hi_floor) return lo_ceil;
    if (bits >= cfg.max_bits) throw PrecisionExhaustedError(cfg.max_bits);
    if (bits > cfg.max_bits / 2) bits = cfg.max_bits / 2;  // land exactly
  }
}

}  // namespace domino
