#include <doctest.h>

#include <random>

#include "domino/reference.hpp"
#include "domino/series.hpp"
#include "domino/transfer.hpp"

using namespace domino;

namespace {

IntPolynomial poly(std::initializer_list<long> cs) {
  std::vector<mpz_class> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("gf6 coefficient lists") {
  auto gf = gf6();
  CHECK(gf.numerator == poly({1, -27, 177, -328, 177, -27, 1}));
  CHECK(gf.denominator ==
        poly({1, -40, 416, -1224, 1224, -416, 40, -1}));
  CHECK(gf.denominator.coeff(0) == 1);
}

TEST_CASE("series expansion of gf6") {
  auto a = series_expand(gf6(), 6);
  const long head[6] = {1, 13, 281, 6728, 167089, 4213133};
  for (int i = 0; i < 6; ++i) CHECK(a[static_cast<std::size_t>(i)] == head[i]);

  auto full = series_expand(gf6(), 18);
  for (std::size_t i = 0; i < known_width6_counts().size(); ++i)
    CHECK(full[i] == known_width6_counts()[i]);
}

TEST_CASE("expansion agrees with the transfer counts through n=30") {
  auto a = series_expand(gf6(), 31);
  for (int n = 0; n <= 30; ++n)
    CHECK(a[static_cast<std::size_t>(n)] == count_via_transfer(6, 2 * n));
}

TEST_CASE("geometric series") {
  RationalGF geo{poly({1}), poly({1, -1})};
  auto a = series_expand(geo, 4);
  for (auto& v : a) CHECK(v == 1);
}

TEST_CASE("expansion requires a unit constant term") {
  RationalGF bad{poly({1}), poly({0, 1})};
  CHECK_THROWS_AS(series_expand(bad, 3), NotExpandableError);
  CHECK_THROWS_AS(recurrence_from_gf(bad), NotExpandableError);
}

TEST_CASE("recurrence read off gf6") {
  auto rec = recurrence_from_gf(gf6());
  REQUIRE(rec.order() == 7);
  const long coeffs[7] = {40, -416, 1224, -1224, 416, -40, 1};
  for (int i = 0; i < 7; ++i)
    CHECK(rec.coeffs[static_cast<std::size_t>(i)] == coeffs[i]);

  auto seed = series_expand(gf6(), 7);
  CHECK(apply_recurrence(rec, seed, 7) == mpz_class("2720246633"));
  CHECK(apply_recurrence(rec, seed, 17) ==
        mpz_class("314771823879840325570888"));
}

TEST_CASE("Fibonacci recurrence") {
  RationalGF fib{poly({1}), poly({1, -1, -1})};
  auto rec = recurrence_from_gf(fib);
  REQUIRE(rec.order() == 2);
  CHECK(rec.coeffs[0] == 1);
  CHECK(rec.coeffs[1] == 1);
  CHECK(apply_recurrence(rec, {mpz_class(0), mpz_class(1)}, 10) == 55);
}

TEST_CASE("short seeds are rejected") {
  auto rec = recurrence_from_gf(gf6());
  CHECK_THROWS_AS(apply_recurrence(rec, {mpz_class(1)}, 9),
                  SeedTooShortError);
}

TEST_CASE("order-20 symmetric recurrence mirrors the characteristic poly") {
  auto rec = symmetric_recurrence_order20();
  REQUIRE(rec.order() == 20);
  auto cp = expected_compact_char_poly();
  // a_m = sum coeffs[k-1] a_{m-k} must match the monic polynomial's tail.
  for (std::size_t k = 1; k <= 20; ++k)
    CHECK(rec.coeffs[k - 1] == -cp.coeffs[20 - k]);
  for (std::size_t k = 1; k <= 9; ++k)
    CHECK(rec.coeffs[k - 1] == rec.coeffs[19 - k]);  // pair symmetry
  CHECK(rec.coeffs[19] == -1);
}

TEST_CASE("order-20 recurrence extends the transfer sequence") {
  std::vector<mpz_class> seq;
  for (int n = 0; n <= 25; ++n) seq.push_back(count_via_transfer(6, 2 * n));
  std::vector<mpz_class> seed(seq.begin(), seq.begin() + 20);

  auto rec = symmetric_recurrence_order20();
  for (std::size_t n = 20; n <= 25; ++n)
    CHECK(apply_recurrence(rec, seed, n) == seq[n]);

  // The uncorrected variant must fail its first prediction.
  auto bad = symmetric_recurrence_order20_uncorrected();
  CHECK(apply_recurrence(bad, seed, 20) != seq[20]);
}

TEST_CASE("the two recurrences agree far out") {
  auto rec7 = recurrence_from_gf(gf6());
  auto seq7 = extend_sequence(rec7, series_expand(gf6(), 7), 60);
  auto rec20 = symmetric_recurrence_order20();
  auto seq20 = extend_sequence(
      rec20, std::vector<mpz_class>(seq7.begin(), seq7.begin() + 20), 60);
  CHECK(seq7 == seq20);
}

TEST_CASE("characteristic polynomial of the compact matrix") {
  auto cp = char_poly(compact_matrix());
  CHECK(cp == expected_compact_char_poly());
  CHECK(cp.degree() == 20);
  CHECK(cp.coeffs[19] == -63);
  CHECK(cp.coeffs[0] == 1);
  CHECK(is_palindromic(cp));
}

TEST_CASE("characteristic polynomial against hand formulas") {
  BigMatrix one(1);
  one.at(0, 0) = 5;
  CHECK(char_poly(one) == poly({-5, 1}));

  BigMatrix two(2);
  two.at(0, 0) = 1;
  two.at(0, 1) = 2;
  two.at(1, 0) = 3;
  two.at(1, 1) = 4;
  // det = -2, trace = 5
  CHECK(char_poly(two) == poly({-2, -5, 1}));
}

TEST_CASE("Cayley-Hamilton over exact integers") {
  auto big = compact_matrix().to_big_matrix();
  auto cp = char_poly(compact_matrix());
  BigMatrix acc = BigMatrix::identity(20);
  for (int i = 19; i >= 0; --i) {
    acc = acc.multiply(big);
    for (int d = 0; d < 20; ++d)
      acc.at(d, d) += cp.coeffs[static_cast<std::size_t>(i)];
  }
  CHECK(acc.is_zero());
}

TEST_CASE("palindrome predicate") {
  CHECK(is_palindromic(poly({1, 2, 1})));
  CHECK_FALSE(is_palindromic(poly({1, 2, 3})));
  CHECK(is_palindromic(IntPolynomial{}));
}

TEST_CASE("u-substitution identity") {
  CHECK(check_u_identity(mpq_class(1)));
  CHECK(u_identity_value(mpq_class(1)) == mpq_class(2, 13));
  CHECK(check_u_identity(mpq_class(2)));
  CHECK_THROWS_AS(check_u_identity(mpq_class(0)), DomainError);
}

TEST_CASE("u-substitution identity at seeded rational points") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> dist(1, 1000);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 20; ++i) {
    mpq_class x(dist(rng), dist(rng));
    x.canonicalize();
    if (flip(rng)) x = -x;
    CHECK(check_u_identity(x));
  }
}

TEST_CASE("polynomial JSON form") {
  CHECK(polynomial_to_json(poly({1, -27})) == "[\"1\",\"-27\"]");
  CHECK(polynomial_to_json(IntPolynomial{}) == "[]");
}
