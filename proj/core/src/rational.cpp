#include "heronpairs/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace heronpairs {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Degenerate("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = big_gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Degenerate("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  // Denominators are positive, so cross-multiplication preserves order.
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t i = start;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected digit", start);
    return i;
  };

  if (text.empty()) throw ParseError("empty rational", 0);
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  std::size_t num_end = digits(pos);
  BigInt num(std::string(text.substr(0, num_end)));

  if (num_end == text.size()) return Rational(std::move(num), 1);
  if (text[num_end] != '/') throw ParseError("expected '/'", num_end);
  std::size_t den_start = num_end + 1;
  std::size_t den_end = digits(den_start);
  if (den_end != text.size()) throw ParseError("trailing characters", den_end);
  BigInt den(std::string(text.substr(den_start, den_end - den_start)));
  if (den == 0) throw ParseError("zero denominator", den_start);
  return Rational(std::move(num), std::move(den));
}

Rational parse_rational(std::string_view text) { return Rational::parse(text); }

Rational abs(const Rational& q) { return q.is_negative() ? -q : q; }

Rational pow(const Rational& q, int e) {
  if (e < 0) return Rational(1) / pow(q, -e);
  Rational result(1);
  Rational base = q;
  for (unsigned n = static_cast<unsigned>(e); n != 0; n >>= 1) {
    if (n & 1) result *= base;
    base *= base;
  }
  return result;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.is_negative()) throw NegativeInput("rational_sqrt of a negative value");
  BigInt rn = boost::multiprecision::sqrt(q.num());
  if (rn * rn != q.num()) return std::nullopt;
  BigInt rd = boost::multiprecision::sqrt(q.den());
  if (rd * rd != q.den()) return std::nullopt;
  return Rational(std::move(rn), std::move(rd));
}

}  // namespace heronpairs
