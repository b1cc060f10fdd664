#pragma once

#include <vector>

#include <gmpxx.h>

#include "domino/series.hpp"

namespace domino {

// Published reference values the verification suites pin against.

// Tiling counts of 6 x 2n boards, n = 0..17.
inline const std::vector<mpz_class>& known_width6_counts() {
  static const std::vector<mpz_class> table = {
      mpz_class("1"),
      mpz_class("13"),
      mpz_class("281"),
      mpz_class("6728"),
      mpz_class("167089"),
      mpz_class("4213133"),
      mpz_class("106912793"),
      mpz_class("2720246633"),
      mpz_class("69289288909"),
      mpz_class("1765722581057"),
      mpz_class("45005025662792"),
      mpz_class("1147185247901449"),
      mpz_class("29242880940226381"),
      mpz_class("745439797095329713"),
      mpz_class("19002353776441540177"),
      mpz_class("484398978524471931341"),
      mpz_class("12348080425980866090537"),
      mpz_class("314771823879840325570888"),
  };
  return table;
}

// Characteristic polynomial of the 20x20 compact matrix, ascending degree.
// Palindromic and monic; the constant term 1 pins det = 1.
inline IntPolynomial expected_compact_char_poly() {
  static const long half[10] = {1,        -63,       1561,     -21023,
                                176393,   -992383,   3912609,  -11117602,
                                23182782, -35879970};
  std::vector<mpz_class> coeffs(21);
  for (int i = 0; i < 10; ++i) {
    coeffs[static_cast<std::size_t>(i)] = half[i];
    coeffs[static_cast<std::size_t>(20 - i)] = half[i];
  }
  coeffs[10] = 41475390;
  return IntPolynomial(std::move(coeffs));
}

}  // namespace domino
