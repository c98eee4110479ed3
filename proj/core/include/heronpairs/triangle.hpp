#pragma once

#include <array>
#include <optional>

#include "heronpairs/rational.hpp"

namespace heronpairs {

// Three positive rational sides satisfying the strict triangle inequality
// (equivalently, with positive sides, (a+b+c)(a+b-c)(b+c-a)(c+a-b) > 0).
// The constructor enforces both; a Triangle value is always valid.
class Triangle {
 public:
  Triangle(Rational a, Rational b, Rational c);  // throws InvalidSides

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  Rational perimeter() const { return a_ + b_ + c_; }
  std::array<Rational, 3> sides() const { return {a_, b_, c_}; }
  std::array<Rational, 3> sorted_sides() const;
  bool congruent_to(const Triangle& o) const;

  bool operator==(const Triangle& o) const = default;

 private:
  Rational a_, b_, c_;
};

// A triangle together with its rational area, circumradius, inradius and
// perimeter. Produced only by certification or by the exact parametrization,
// so the Heron identities hold by construction:
//   16 A^2 = (a+b+c)(a+b-c)(b+c-a)(c+a-b),  abc = 4RA,  2A = rP.
struct HeronCertificate {
  Triangle triangle;
  Rational area;
  Rational circumradius;
  Rational inradius;
  Rational perimeter;
};

// (x, y, t) coordinates for a rational triangle: x, y, t nonzero and
// t^2 y != x. The induced sides are
//   a = (x^2 + t^2 y^2)/(t^2 y - x),  b = x y (t^2 + 1)/(t^2 y - x),  c = x + y.
struct ParamTriangle {
  Rational x;
  Rational y;
  Rational t;
};

// A^2, i.e. (a+b+c)(a+b-c)(b+c-a)(c+a-b)/16; strictly positive for any
// valid Triangle.
Rational heron_area_squared(const Triangle& tri);

// Certifies the triangle as Heron: rational area A together with
// R = abc/(4A), r = 2A/(a+b+c), P = a+b+c. Returns nullopt when the area is
// irrational (the triangle is not Heron; not an error).
std::optional<HeronCertificate> certify_heron(const Triangle& tri);

// The incircle tangent lengths x = (-a+b+c)/2, y = (a-b+c)/2, z = (a+b-c)/2;
// all strictly positive. Inverse of sides_from_xyz.
std::array<Rational, 3> xyz_from_sides(const Triangle& tri);

// Triangle (y+z, z+x, x+y); throws InvalidSides when the induced sides do
// not form a triangle.
Triangle sides_from_xyz(const Rational& x, const Rational& y, const Rational& z);

// Raw induced sides of the (x, y, t) parametrization, unvalidated and
// possibly negative. Throws DegenerateParam when a parameter is zero or
// t^2 y = x. Building block for triangle_from_param and the solvers.
std::array<Rational, 3> param_sides_raw(const ParamTriangle& p);

// The triangle induced by (x, y, t), with the certificate computed from the
// closed forms A = t x y (x+y)/(t^2 y - x), R = (x^2+t^2 y^2)(t^2+1)/(4(t^2 y - x)t),
// r = x/t, P = 2 t^2 y (x+y)/(t^2 y - x), taken up to a global sign.
// If all three induced sides are negative the triple is negated; mixed signs
// or a zero side raise DegenerateParam.
HeronCertificate triangle_from_param(const ParamTriangle& p);

// Inverse of triangle_from_param for the side ordering of the input:
// (x, y) from xyz_from_sides and t = A/(y z). Round-trips exactly with
// triangle_from_param for every Heron triangle.
ParamTriangle param_from_triangle(const HeronCertificate& cert);

// The similar triangle with coprime integer sides: multiply by the lcm of the
// denominators, divide by the gcd of the resulting integers.
Triangle normalize_primitive(const Triangle& tri);

// True iff the largest side squared equals the sum of squares of the others.
bool is_right(const Triangle& tri);

}  // namespace heronpairs
