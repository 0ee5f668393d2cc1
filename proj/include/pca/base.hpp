// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pca {

/// Coordinates, circle lengths and constraint weights.  Construction
/// parameters grow like n^4, so 64 bits are not enough.
using Int = __int128;
using Id = std::int32_t;
inline constexpr Id kNone = -1;

enum class Errc {
  EmptyModel,
  DuplicateExtreme,
  NotProper,
  OutOfRange,
  ExternalArcInPig,
  KTooLarge,
  Disconnected,
  PigInput,
  ExtremeCollision,
  NotUniform,
  InvalidParams,
  NotAWalk,
  NotPositive,
  NotFound,
  NotMultiplicative,
  PreconditionViolated,
  CycleInReduced,
  InternalVerificationFailed,
  SyntaxError,
  GiveUp,
  Overflow,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

std::string to_string(Int v);
/// Parses a signed decimal integer; throws Error(SyntaxError).
Int parse_int(std::string_view text);

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
/// Non-negative remainder.
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}
Int gcd(Int a, Int b);

/// Exact fraction in lowest terms with positive denominator.  `inf()` is
/// the only non-finite value and compares above every finite one.
class Rational {
 public:
  Rational() = default;
  Rational(Int num, Int den = 1);
  static Rational inf();

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_inf() const { return inf_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
  bool inf_ = false;
};

}  // namespace pca
