#include "heronpairs/triangle.hpp"

#include <algorithm>
#include <utility>

namespace heronpairs {

namespace {

Rational heron_product(const Rational& a, const Rational& b, const Rational& c) {
  return (a + b + c) * (a + b - c) * (b + c - a) * (c + a - b);
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace

Triangle::Triangle(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.sign() <= 0 || b_.sign() <= 0 || c_.sign() <= 0)
    throw InvalidSides("side not positive");
  if (heron_product(a_, b_, c_).sign() <= 0)
    throw InvalidSides("triangle inequality violated");
}

std::array<Rational, 3> Triangle::sorted_sides() const {
  std::array<Rational, 3> s{a_, b_, c_};
  std::sort(s.begin(), s.end());
  return s;
}

bool Triangle::congruent_to(const Triangle& o) const {
  return sorted_sides() == o.sorted_sides();
}

Rational heron_area_squared(const Triangle& tri) {
  return heron_product(tri.a(), tri.b(), tri.c()) / Rational(16);
}

std::optional<HeronCertificate> certify_heron(const Triangle& tri) {
  std::optional<Rational> area = rational_sqrt(heron_area_squared(tri));
  if (!area) return std::nullopt;
  Rational perimeter = tri.perimeter();
  Rational circumradius = tri.a() * tri.b() * tri.c() / (Rational(4) * *area);
  Rational inradius = Rational(2) * *area / perimeter;
  return HeronCertificate{tri, std::move(*area), std::move(circumradius),
                          std::move(inradius), std::move(perimeter)};
}

std::array<Rational, 3> xyz_from_sides(const Triangle& tri) {
  Rational half(1, 2);
  return {(tri.b() + tri.c() - tri.a()) * half,
          (tri.a() + tri.c() - tri.b()) * half,
          (tri.a() + tri.b() - tri.c()) * half};
}

Triangle sides_from_xyz(const Rational& x, const Rational& y, const Rational& z) {
  return Triangle(y + z, z + x, x + y);
}

std::array<Rational, 3> param_sides_raw(const ParamTriangle& p) {
  if (p.x.is_zero() || p.y.is_zero() || p.t.is_zero())
    throw DegenerateParam("zero parameter");
  Rational den = p.t * p.t * p.y - p.x;
  if (den.is_zero()) throw DegenerateParam("t^2*y - x = 0");
  Rational a = (p.x * p.x + p.t * p.t * p.y * p.y) / den;
  Rational b = p.x * p.y * (p.t * p.t + 1) / den;
  Rational c = p.x + p.y;
  return {std::move(a), std::move(b), std::move(c)};
}

HeronCertificate triangle_from_param(const ParamTriangle& p) {
  std::array<Rational, 3> s = param_sides_raw(p);
  int sign = s[0].sign();
  for (const Rational& side : s) {
    if (side.is_zero()) throw DegenerateParam("zero side");
    if (side.sign() != sign) throw DegenerateParam("mixed-sign sides");
  }
  if (sign < 0)
    for (Rational& side : s) side = -side;
  Triangle tri(s[0], s[1], s[2]);

  Rational den = p.t * p.t * p.y - p.x;
  Rational area = abs(p.t * p.x * p.y * (p.x + p.y) / den);
  Rational circumradius =
      abs((p.x * p.x + p.t * p.t * p.y * p.y) * (p.t * p.t + 1) /
          (Rational(4) * den * p.t));
  Rational inradius = abs(p.x / p.t);
  Rational perimeter = abs(Rational(2) * p.t * p.t * p.y * (p.x + p.y) / den);
  return HeronCertificate{std::move(tri), std::move(area), std::move(circumradius),
                          std::move(inradius), std::move(perimeter)};
}

ParamTriangle param_from_triangle(const HeronCertificate& cert) {
  std::array<Rational, 3> xyz = xyz_from_sides(cert.triangle);
  Rational t = cert.area / (xyz[1] * xyz[2]);
  return ParamTriangle{xyz[0], xyz[1], std::move(t)};
}

Triangle normalize_primitive(const Triangle& tri) {
  BigInt l = big_lcm(big_lcm(tri.a().den(), tri.b().den()), tri.c().den());
  BigInt na = tri.a().num() * (l / tri.a().den());
  BigInt nb = tri.b().num() * (l / tri.b().den());
  BigInt nc = tri.c().num() * (l / tri.c().den());
  BigInt g = big_gcd(big_gcd(na, nb), nc);
  return Triangle(Rational(na / g), Rational(nb / g), Rational(nc / g));
}

bool is_right(const Triangle& tri) {
  std::array<Rational, 3> s = tri.sorted_sides();
  return s[0] * s[0] + s[1] * s[1] == s[2] * s[2];
}

}  // namespace heronpairs
