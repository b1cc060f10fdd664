#include "domino/series.hpp"

#include <algorithm>

namespace domino {

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial{};
  std::vector<mpz_class> out(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out[i + j] += a.coeffs[i] * b.coeffs[j];
  return IntPolynomial(std::move(out));
}

namespace {

IntPolynomial from_longs(std::initializer_list<long> cs) {
  std::vector<mpz_class> v;
  v.reserve(cs.size());
  for (long c : cs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

}  // namespace

IntPolynomial gf6_denominator_core() {
  return from_longs({1, -39, 377, -847, 377, -39, 1});
}

RationalGF gf6() {
  RationalGF gf;
  gf.numerator = from_longs({1, -27, 177, -328, 177, -27, 1});
  gf.denominator = multiply(from_longs({1, -1}), gf6_denominator_core());
  return gf;
}

std::vector<mpz_class> series_expand(const RationalGF& gf,
                                     std::size_t n_terms) {
  if (gf.denominator.coeff(0) != 1)
    throw NotExpandableError("denominator constant term must be 1");
  std::vector<mpz_class> a(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) {
    mpz_class v = gf.numerator.coeff(n);
    const std::size_t kmax =
        std::min(n, static_cast<std::size_t>(
                        std::max(gf.denominator.degree(), 0)));
    for (std::size_t k = 1; k <= kmax; ++k)
      v -= gf.denominator.coeff(k) * a[n - k];
    a[n] = v;
  }
  return a;
}

LinearRecurrence recurrence_from_gf(const RationalGF& gf) {
  if (gf.denominator.coeff(0) != 1)
    throw NotExpandableError("denominator constant term must be 1");
  const int order = gf.denominator.degree();
  if (order < 1) throw NotExpandableError("constant denominator");
  LinearRecurrence rec;
  rec.coeffs.reserve(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k)
    rec.coeffs.push_back(-gf.denominator.coeff(static_cast<std::size_t>(k)));
  return rec;
}

mpz_class apply_recurrence(const LinearRecurrence& rec,
                           const std::vector<mpz_class>& seed, std::size_t n) {
  if (seed.size() < rec.order())
    throw SeedTooShortError("seed of length " + std::to_string(seed.size()) +
                            " shorter than order " +
                            std::to_string(rec.order()));
  if (n < seed.size()) return seed[n];
  std::vector<mpz_class> a = seed;
  a.reserve(n + 1);
  for (std::size_t m = seed.size(); m <= n; ++m) {
    mpz_class v = 0;
    for (std::size_t k = 1; k <= rec.order(); ++k)
      v += rec.coeffs[k - 1] * a[m - k];
    a.push_back(std::move(v));
  }
  return a[n];
}

std::vector<mpz_class> extend_sequence(const LinearRecurrence& rec,
                                       std::vector<mpz_class> seed,
                                       std::size_t n) {
  if (seed.size() < rec.order())
    throw SeedTooShortError("seed of length " + std::to_string(seed.size()) +
                            " shorter than order " +
                            std::to_string(rec.order()));
  seed.reserve(n + 1);
  for (std::size_t m = seed.size(); m <= n; ++m) {
    mpz_class v = 0;
    for (std::size_t k = 1; k <= rec.order(); ++k)
      v += rec.coeffs[k - 1] * seed[m - k];
    seed.push_back(std::move(v));
  }
  seed.resize(n + 1);
  return seed;
}

namespace {

constexpr long kSymmetricPairs[9] = {63,      -1561,    21023,
                                     -176393, 992383,   -3912609,
                                     11117602, -23182782, 35879970};
constexpr long kSymmetricCenter = -41475390;

}  // namespace

LinearRecurrence symmetric_recurrence_order20() {
  LinearRecurrence rec;
  rec.coeffs.resize(20);
  for (int k = 1; k <= 9; ++k) {
    rec.coeffs[static_cast<std::size_t>(k - 1)] = kSymmetricPairs[k - 1];
    rec.coeffs[static_cast<std::size_t>(20 - k - 1)] = kSymmetricPairs[k - 1];
  }
  rec.coeffs[9] = kSymmetricCenter;
  rec.coeffs[19] = -1;
  return rec;
}

LinearRecurrence symmetric_recurrence_order20_uncorrected() {
  LinearRecurrence rec = symmetric_recurrence_order20();
  // k=1 pair applied to (c_{n-1}, c_n) instead of (c_{n-1}, c_{n+1}).
  rec.coeffs[8] = 0;
  rec.coeffs[9] = mpz_class(kSymmetricCenter) + kSymmetricPairs[0];
  return rec;
}

IntPolynomial char_poly(const BigMatrix& m) {
  const int n = m.dim();
  std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1);
  a[static_cast<std::size_t>(n)] = 1;

  auto trace_of = [n](const BigMatrix& x) {
    mpz_class t = 0;
    for (int i = 0; i < n; ++i) t += x.at(i, i);
    return t;
  };

  BigMatrix work = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      // work <- m * (work + a_{n-k+1} * I)
      BigMatrix shifted = work;
      const mpz_class& d = a[static_cast<std::size_t>(n - k + 1)];
      for (int i = 0; i < n; ++i) shifted.at(i, i) += d;
      work = m.multiply(shifted);
    }
    mpz_class t = trace_of(work);
    mpz_class coeff;
    mpz_class divisor = k;
    mpz_divexact(coeff.get_mpz_t(), t.get_mpz_t(), divisor.get_mpz_t());
    a[static_cast<std::size_t>(n - k)] = -coeff;
  }
  return IntPolynomial(std::move(a));
}

IntPolynomial char_poly(const CompactMatrix& c) {
  return char_poly(c.to_big_matrix());
}

bool is_palindromic(const IntPolynomial& p) {
  const auto& c = p.coeffs;
  for (std::size_t i = 0; i < (c.size() + 1) / 2; ++i)
    if (c[i] != c[c.size() - 1 - i]) return false;
  return true;
}

namespace {

// (1-x) * gf6(x) with the (1-x) factor cancelled.
mpq_class lhs_value(const mpq_class& x) {
  RationalGF gf = gf6();
  mpq_class den = gf6_denominator_core().evaluate(x);
  if (den == 0) throw DomainError("x is a pole of the generating function");
  mpq_class v = gf.numerator.evaluate(x) / den;
  v.canonicalize();
  return v;
}

mpq_class rhs_value(const mpq_class& x) {
  mpq_class u = x + mpq_class(1) / x;
  IntPolynomial p = IntPolynomial({mpz_class(-274), mpz_class(174),
                                   mpz_class(-27), mpz_class(1)});
  IntPolynomial q = IntPolynomial({mpz_class(-769), mpz_class(374),
                                   mpz_class(-39), mpz_class(1)});
  mpq_class den = q.evaluate(u);
  if (den == 0) throw DomainError("u is a pole of the substituted form");
  mpq_class v = p.evaluate(u) / den;
  v.canonicalize();
  return v;
}

}  // namespace

bool check_u_identity(const mpq_class& x) {
  if (x == 0) throw DomainError("u = x + 1/x is undefined at x = 0");
  return lhs_value(x) == rhs_value(x);
}

mpq_class u_identity_value(const mpq_class& x) {
  if (x == 0) throw DomainError("u = x + 1/x is undefined at x = 0");
  mpq_class lhs = lhs_value(x);
  if (lhs != rhs_value(x)) throw Error("identity sides disagree");
  return lhs;
}

std::string polynomial_to_json(const IntPolynomial& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) out += ",";
    out += "\"" + p.coeffs[i].get_str() + "\"";
  }
  out += "]";
  return out;
}

}  // namespace domino
