#include <doctest.h>

#include "domino/enumerate.hpp"
#include "domino/kasteleyn.hpp"

using namespace domino;

TEST_CASE("1x1 parameters give the two 2x2 covers") {
  auto box = kasteleyn_product_interval({1, 1}, 64);
  CHECK(box.contains(2));
  CHECK(kasteleyn_count({1, 1}) == 2);
}

TEST_CASE("the 6x6 enclosure isolates 6728 at 128 bits") {
  auto box = kasteleyn_product_interval({3, 3}, 128);
  CHECK(box.contains(6728));
  CHECK(box.width() < mpq_class(1, 2));
  CHECK(kasteleyn_count({3, 3}) == 6728);
}

TEST_CASE("table values for 6x8 and 6x16") {
  CHECK(kasteleyn_product_interval({3, 4}, 128).contains(167089));
  CHECK(kasteleyn_count({3, 4}) == 167089);
  CHECK(kasteleyn_count({3, 8}) == mpz_class("69289288909"));
}

TEST_CASE("enclosures are sound against the counting oracle") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) {
      const mpz_class exact = count_tilings_oracle({2 * r, 2 * n});
      for (unsigned bits : {64u, 128u}) {
        auto box = kasteleyn_product_interval({r, n}, bits);
        CHECK(box.contains(exact));
      }
    }
}

TEST_CASE("doubling the precision never widens the enclosure") {
  for (auto [r, n] : {std::pair{2, 2}, {3, 3}, {4, 5}}) {
    auto coarse = kasteleyn_product_interval({r, n}, 64);
    auto fine = kasteleyn_product_interval({r, n}, 128);
    CHECK(fine.width() <= coarse.width());
    CHECK(coarse.lo <= fine.lo);
    CHECK(fine.hi <= coarse.hi);
  }
}

TEST_CASE("parameter symmetry") {
  for (int r = 1; r <= 4; ++r)
    for (int n = r; n <= 4; ++n)
      CHECK(kasteleyn_count({r, n}) == kasteleyn_count({n, r}));
}

TEST_CASE("a starved precision ceiling is reported") {
  try {
    kasteleyn_count({12, 12}, {64, 64});
    FAIL("expected PrecisionExhaustedError");
  } catch (const PrecisionExhaustedError& e) {
    CHECK(e.max_bits == 64);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(kasteleyn_product_interval({0, 1}, 64), Error);
  CHECK_THROWS_AS(kasteleyn_product_interval({1, 1}, 32), Error);
  CHECK_THROWS_AS(kasteleyn_count({1, 1}, {128, 64}), Error);
}
