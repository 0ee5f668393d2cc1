// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "pca/base.hpp"

using namespace pca;

TEST_CASE("rational normalizes sign and gcd") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
}

TEST_CASE("infinity is above every finite rational") {
  CHECK(Rational(1000000) < Rational::inf());
  CHECK(Rational::inf() == Rational::inf());
  CHECK(Rational::inf().is_inf());
}

TEST_CASE("checked arithmetic reports overflow") {
  Int big = std::numeric_limits<Int>::max();
  CHECK_ERRC(checked_add(big, 1), Errc::Overflow);
  CHECK_ERRC(checked_mul(big / 2 + 1, 2), Errc::Overflow);
  CHECK(checked_mul(-3, 7) == -21);
}

TEST_CASE("integer text round trip") {
  CHECK(parse_int("-170141183460469231731687303715884105727") == -std::numeric_limits<Int>::max());
  CHECK(to_string(parse_int("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(mod(-3, 10) == 7);
  CHECK(gcd(12, 18) == 6);
}
