#pragma once

#include <array>

#include "heronpairs/rational.hpp"

namespace heronpairs {

// Univariate quartic q(u) = q4 u^4 + q3 u^3 + q2 u^2 + q1 u + q0 with q4 != 0.
struct QuarticPoly {
  std::array<Rational, 5> q;  // q[k] is the coefficient of u^k

  Rational eval(const Rational& u) const;
  // Taylor shift: coefficients of Q(s) = q(u0 + s).
  std::array<Rational, 5> shifted(const Rational& u0) const;
};

// Fermat's method: given u0 with q(u0) a nonzero rational square w^2,
// complete the square with r(s) = r0 + r1 s + r2 s^2 matching Q(s) = q(u0+s)
// through s^2, so Q(s) - r(s)^2 = (Q3 - 2 r1 r2) s^3 + (Q4 - r2^2) s^4 and
// the remaining root s* = -(Q3 - 2 r1 r2)/(Q4 - r2^2) gives a new u = u0 + s*
// with q(u) again a square. Tries r0 = +w then r0 = -w; throws DescentStuck
// when both degenerate (s* = 0 or the leading difference vanishes) and
// NotASquareAtBase when q(u0) is not a nonzero square.
Rational fermat_quartic_step(const QuarticPoly& q, const Rational& u0);

}  // namespace heronpairs
