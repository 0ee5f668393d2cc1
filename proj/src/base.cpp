// SPDX-License-Identifier: Apache-2.0
#include "pca/base.hpp"

#include <algorithm>

namespace pca {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::EmptyModel: return "EmptyModel";
    case Errc::DuplicateExtreme: return "DuplicateExtreme";
    case Errc::NotProper: return "NotProper";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ExternalArcInPig: return "ExternalArcInPig";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::PigInput: return "PigInput";
    case Errc::ExtremeCollision: return "ExtremeCollision";
    case Errc::NotUniform: return "NotUniform";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NotAWalk: return "NotAWalk";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotFound: return "NotFound";
    case Errc::NotMultiplicative: return "NotMultiplicative";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::CycleInReduced: return "CycleInReduced";
    case Errc::InternalVerificationFailed: return "InternalVerificationFailed";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::GiveUp: return "GiveUp";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // negate through unsigned to survive the minimum value
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string out;
  while (u > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw Error(Errc::SyntaxError, "empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw Error(Errc::SyntaxError, "bad integer '" + std::string(text) + "'");
  Int v = 0;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9') throw Error(Errc::SyntaxError, "bad integer '" + std::string(text) + "'");
    v = checked_add(checked_mul(v, 10), ch - '0');
  }
  return neg ? -v : v;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit multiplication");
  return r;
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Rational(Int num, Int den) {
  if (den == 0) throw Error(Errc::InvalidParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::inf() {
  Rational r;
  r.inf_ = true;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.inf_ || b.inf_) return Rational::inf();
  if (a.den_ == b.den_) return Rational(checked_add(a.num_, b.num_), a.den_);
  Int g = gcd(a.den_, b.den_);
  Int da = a.den_ / g;
  return Rational(checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, da)),
                  checked_mul(da, b.den_));
}

Rational operator-(const Rational& a) {
  if (a.inf_) throw Error(Errc::InvalidParams, "negating infinity");
  Rational r = a;
  r.num_ = -r.num_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.inf_ || b.inf_) return Rational::inf();
  Int g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.inf_ || b.inf_) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

std::string Rational::str() const {
  if (inf_) return "inf";
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

}  // namespace pca
