#include <doctest.h>

#include <set>

#include "domino/enumerate.hpp"

using namespace domino;

TEST_CASE("oracle counts") {
  CHECK(count_tilings_oracle({6, 6}) == 6728);
  CHECK(count_tilings_oracle({2, 2}) == 2);
  CHECK(count_tilings_oracle({1, 1}) == 0);
  CHECK(count_tilings_oracle({6, 2}) == 13);
  CHECK(count_tilings_oracle({2, 3}) == 3);
  CHECK(count_tilings_oracle({8, 8}) == 12988816);
  CHECK(count_tilings_oracle({3, 3}) == 0);
  CHECK(count_tilings_oracle({1, 2}) == 1);
}

TEST_CASE("oracle respects its bounds") {
  CHECK_THROWS_AS(count_tilings_oracle({18, 16}), AreaTooLargeError);
  CHECK_THROWS_AS(count_tilings_oracle({2, 128}), AreaTooLargeError);
  CHECK_THROWS_AS(count_tilings_oracle({0, 4}), Error);
}

TEST_CASE("transposition symmetry") {
  for (int r = 1; r <= 6; ++r)
    for (int c = r; c <= 6; ++c)
      CHECK(count_tilings_oracle({r, c}) == count_tilings_oracle({c, r}));
}

TEST_CASE("2x2 stream is exactly the two covers, horizontal first") {
  auto tilings = enumerate_tilings({2, 2}, {10});
  REQUIRE(tilings.size() == 2);
  CHECK(tilings[0] ==
        validate_tiling({2, 2}, {horizontal_at(0, 0), horizontal_at(1, 0)}));
  CHECK(tilings[1] ==
        validate_tiling({2, 2}, {vertical_at(0, 0), vertical_at(0, 1)}));
}

TEST_CASE("stream cardinality equals the oracle count") {
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 5; ++c) {
      std::uint64_t n = 0;
      for_each_tiling({r, c}, [&](const Tiling&) {
        ++n;
        return true;
      });
      CHECK(n == count_tilings_oracle({r, c}));
    }
}

TEST_CASE("6x6 stream has 6728 distinct members") {
  auto tilings = enumerate_tilings({6, 6}, {10000});
  REQUIRE(tilings.size() == 6728);
  std::set<std::string> distinct;
  for (const auto& t : tilings) distinct.insert(tiling_to_text(t));
  CHECK(distinct.size() == 6728);
}

TEST_CASE("odd-area boards give an empty stream, not an error") {
  int n = 0;
  for_each_tiling({3, 3}, [&](const Tiling&) {
    ++n;
    return true;
  });
  CHECK(n == 0);
}

TEST_CASE("cap is enforced up front") {
  try {
    enumerate_tilings({6, 6}, {100});
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.cap == 100);
  }
}

TEST_CASE("early stop from the visitor") {
  int n = 0;
  for_each_tiling({6, 6}, [&](const Tiling&) { return ++n < 5; });
  CHECK(n == 5);
}
