#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "domino/errors.hpp"
#include "domino/transfer.hpp"

namespace domino {

// Integer polynomial, coefficients ascending by degree. Normalized: the
// highest-degree coefficient is nonzero unless the polynomial is zero.
struct IntPolynomial {
  std::vector<mpz_class> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) {
    normalize();
  }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const mpz_class& coeff(std::size_t i) const {
    static const mpz_class zero = 0;
    return i < coeffs.size() ? coeffs[i] : zero;
  }

  mpq_class evaluate(const mpq_class& x) const;

  bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

// Exact rational generating function; denominator(0) must be 1 for power
// series expansion. No common-factor reduction is enforced.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

// a_n = sum_{k=1}^{order} coeffs[k-1] * a_{n-k}; coeffs.back() != 0.
struct LinearRecurrence {
  std::vector<mpz_class> coeffs;
  std::size_t order() const { return coeffs.size(); }
};

// Generating function of the width-6 strip tiling counts:
// numerator 1 - 27x + 177x^2 - 328x^3 + 177x^4 - 27x^5 + x^6 over the
// expanded product of (1 - x) and the degree-6 palindromic factor.
RationalGF gf6();

// The degree-6 factor of gf6's denominator (the non-(1-x) part).
IntPolynomial gf6_denominator_core();

// First n_terms power-series coefficients by long division.
// Throws NotExpandableError when denominator(0) != 1.
std::vector<mpz_class> series_expand(const RationalGF& gf,
                                     std::size_t n_terms);

// Reads the order-(deg denominator) recurrence off the denominator tail;
// valid for n >= max(deg numerator + 1, order).
LinearRecurrence recurrence_from_gf(const RationalGF& gf);

// a_n for the sequence seeded by `seed` and extended by `rec`. Indices below
// the seed length return the seed value. Throws SeedTooShortError when the
// seed is shorter than the order.
mpz_class apply_recurrence(const LinearRecurrence& rec,
                           const std::vector<mpz_class>& seed, std::size_t n);

// The whole prefix a_0..a_n, seeds included.
std::vector<mpz_class> extend_sequence(const LinearRecurrence& rec,
                                       std::vector<mpz_class> seed,
                                       std::size_t n);

// Order-20 recurrence with coefficient list mirroring the compact matrix's
// characteristic polynomial; pairs c_{n-k}/c_{n+k} share coefficients.
LinearRecurrence symmetric_recurrence_order20();

// A miscopied variant of the same relation with the k=1 pair collapsed onto
// the central term. Kept so the suites can demonstrate that it fails to
// extend the sequence.
LinearRecurrence symmetric_recurrence_order20_uncorrected();

// Exact monic characteristic polynomial via the Faddeev-LeVerrier scheme
// (all divisions exact over the integers). Ascending coefficients.
IntPolynomial char_poly(const CompactMatrix& c);
IntPolynomial char_poly(const BigMatrix& m);

bool is_palindromic(const IntPolynomial& p);

// Evaluates both closed forms of (1-x) * gf6(x) — the cancelled rational
// form and the cubic pair in u = x + 1/x — in exact arithmetic and compares.
// Throws DomainError at x = 0 or at a pole.
bool check_u_identity(const mpq_class& x);

// The common value of both sides at x, for tests of the x -> 1 limit.
mpq_class u_identity_value(const mpq_class& x);

// JSON array of decimal strings, ascending degree.
std::string polynomial_to_json(const IntPolynomial& p);

}  // namespace domino
