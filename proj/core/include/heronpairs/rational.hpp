#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "heronpairs/errors.hpp"

namespace heronpairs {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with denominator > 0.
// Zero is 0/1. This is the universal scalar of the library; no floating
// point anywhere.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  // Parses "p", "p/q", with optional leading '-' or '+'. Throws ParseError
  // on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws Degenerate on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

  // "p/q" in lowest terms, "p" when the denominator is 1.
  std::string str() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
// Integer exponent; negative exponents invert (throws Degenerate on 0^-n).
Rational pow(const Rational& q, int e);

// Exact square root: r >= 0 with r^2 = q, or nullopt when q is not a square
// of a rational. Throws NegativeInput for q < 0. Decided by exact integer
// square roots of the reduced numerator and denominator.
std::optional<Rational> rational_sqrt(const Rational& q);

// Spec'd CLI-facing alias of Rational::parse.
Rational parse_rational(std::string_view text);

}  // namespace heronpairs
