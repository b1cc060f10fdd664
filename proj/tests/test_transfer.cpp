#include <doctest.h>

#include <fstream>

#include "domino/enumerate.hpp"
#include "domino/reference.hpp"
#include "domino/transfer.hpp"

using namespace domino;

namespace {

int reverse_bits(int v, int width) {
  int out = 0;
  for (int i = 0; i < width; ++i)
    if (v & (1 << i)) out |= 1 << (width - 1 - i);
  return out;
}

}  // namespace

TEST_CASE("width-1 transfer matrix") {
  auto t = build_column_transfer(1);
  CHECK(t.entry(0, 0) == 0);
  CHECK(t.entry(0, 1) == 1);
  CHECK(t.entry(1, 0) == 1);
  CHECK(t.entry(1, 1) == 0);
}

TEST_CASE("width-2 empty-to-empty column is the single vertical") {
  CHECK(build_column_transfer(2).entry(0, 0) == 1);
}

TEST_CASE("width-6 squared top-left entry is 13") {
  auto big = build_column_transfer(6).to_big_matrix();
  CHECK(big.multiply(big).at(0, 0) == 13);
}

TEST_CASE("profile matrix symmetry and reversal invariance") {
  for (int w = 1; w <= 6; ++w) {
    auto t = build_column_transfer(w);
    for (int a = 0; a < t.size(); ++a)
      for (std::uint32_t b : t.successors(a)) {
        CHECK(t.entry(static_cast<int>(b), a) == 1);
        CHECK(t.entry(reverse_bits(a, w),
                      reverse_bits(static_cast<int>(b), w)) == 1);
      }
  }
}

TEST_CASE("transfer counts") {
  CHECK(count_via_transfer(6, 6) == 6728);
  CHECK(count_via_transfer(6, 0) == 1);
  CHECK(count_via_transfer(6, 34) ==
        mpz_class("314771823879840325570888"));
}

TEST_CASE("transfer equals the oracle on small boards") {
  for (int w = 1; w <= 6; ++w)
    for (int c = 1; c <= 8; ++c)
      CHECK(count_via_transfer(w, c) == count_tilings_oracle({c, w}));
}

TEST_CASE("width bounds") {
  CHECK_THROWS_AS(build_column_transfer(0), WidthTooLargeError);
  CHECK_THROWS_AS(build_column_transfer(13), WidthTooLargeError);
}

TEST_CASE("matrix powers") {
  auto c = compact_matrix().to_big_matrix();
  PowerStats stats;
  CHECK(matrix_power_entry(c, 0, 0, 0, &stats) == 1);
  CHECK(matrix_power_entry(c, 0, 0, 1) == 0);
  CHECK(stats.multiplications == 0);
  CHECK(matrix_power_entry(c, 1, 0, 0, &stats) == 13);
  CHECK(stats.multiplications == 0);
  CHECK(matrix_power_entry(c, 2, 0, 0, &stats) == 281);
  CHECK_THROWS_AS(matrix_power_entry(c, 1, 20, 0), IndexOutOfRangeError);
}

TEST_CASE("squaring stays within the multiplication bounds") {
  auto c = compact_matrix().to_big_matrix();
  for (std::uint64_t n : {1, 2, 3, 7, 12, 64, 100, 4096}) {
    PowerStats stats;
    matrix_power(c, n, &stats);
    std::uint64_t floor_log2 = 0;
    while ((n >> (floor_log2 + 1)) != 0) ++floor_log2;
    CHECK(stats.multiplications >= floor_log2);
    CHECK(stats.multiplications <= 2 * floor_log2);
  }
}

TEST_CASE("power of a sum splits into a product of powers") {
  auto c = compact_matrix().to_big_matrix();
  for (auto [a, b] : {std::pair{2, 3}, {4, 5}, {1, 7}}) {
    auto lhs = matrix_power(c, static_cast<std::uint64_t>(a + b));
    auto rhs = matrix_power(c, static_cast<std::uint64_t>(a))
                   .multiply(matrix_power(c, static_cast<std::uint64_t>(b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("compact matrix shape") {
  auto c = compact_matrix();
  CHECK(c.is_symmetric());
  CHECK(c.trace() == 63);
  const int expected_row0[20] = {13, 5, 3, 4, 3, 5, 2, 1, 2, 1,
                                 2,  1, 2, 1, 2, 1, 1, 0, 1, 1};
  for (int j = 0; j < 20; ++j) CHECK(c.at(0, j) == expected_row0[j]);
}

TEST_CASE("verify_compact against the transfer counts") {
  auto report = verify_compact(compact_matrix(), 17);
  CHECK(report.ok);
  CHECK(report.checked == 17);

  CompactMatrix identity;
  for (int i = 0; i < 20; ++i) identity.set(i, i, 1);
  auto bad = verify_compact(identity, 3);
  CHECK_FALSE(bad.ok);
  CHECK(bad.first_mismatch == 1);
  CHECK(bad.expected == "13");
  CHECK(bad.actual == "1");
}

TEST_CASE("determinants") {
  CHECK(determinant(compact_matrix().to_big_matrix()) == 1);

  BigMatrix two(2);
  two.at(0, 0) = 3;
  two.at(0, 1) = 7;
  two.at(1, 0) = 1;
  two.at(1, 1) = 5;
  CHECK(determinant(two) == 8);

  BigMatrix singular(3);
  for (int j = 0; j < 3; ++j) {
    singular.at(0, j) = j + 1;
    singular.at(1, j) = 2 * (j + 1);
    singular.at(2, j) = 5;
  }
  CHECK(determinant(singular) == 0);
}

TEST_CASE("fixture asset round-trips and is tamper-evident") {
  auto c = compact_matrix();
  const std::string text = compact_matrix_to_fixture(c);
  CHECK(compact_matrix_from_fixture(text) == c);

  std::ifstream in(DOMINO_FIXTURE_PATH, std::ios::binary);
  REQUIRE(in.good());
  std::string shipped((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(shipped == text);
  CHECK(load_compact_matrix(DOMINO_FIXTURE_PATH) == c);

  std::string corrupted = text;
  corrupted[corrupted.find("13")] = '7';
  CHECK_THROWS_AS(compact_matrix_from_fixture(corrupted), FixtureError);
  CHECK_THROWS_AS(compact_matrix_from_fixture("bogus\n"), FixtureError);
  CHECK_THROWS_AS(
      compact_matrix_from_fixture(text.substr(0, text.size() / 2)),
      FixtureError);
}
