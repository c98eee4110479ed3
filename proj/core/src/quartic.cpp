#include "heronpairs/quartic.hpp"

#include <optional>

#include "heronpairs/errors.hpp"

namespace heronpairs {

Rational QuarticPoly::eval(const Rational& u) const {
  // Horner.
  Rational acc = q[4];
  for (int k = 3; k >= 0; --k) acc = acc * u + q[k];
  return acc;
}

std::array<Rational, 5> QuarticPoly::shifted(const Rational& u0) const {
  static constexpr int binom[5][5] = {{1, 0, 0, 0, 0},
                                      {1, 1, 0, 0, 0},
                                      {1, 2, 1, 0, 0},
                                      {1, 3, 3, 1, 0},
                                      {1, 4, 6, 4, 1}};
  std::array<Rational, 5> out{};
  for (int e = 0; e <= 4; ++e) {
    if (q[e].is_zero()) continue;
    for (int k = 0; k <= e; ++k)
      out[static_cast<std::size_t>(k)] +=
          q[static_cast<std::size_t>(e)] * Rational(binom[e][k]) * pow(u0, e - k);
  }
  return out;
}

Rational fermat_quartic_step(const QuarticPoly& q, const Rational& u0) {
  Rational base = q.eval(u0);
  if (base.is_zero()) throw NotASquareAtBase("q(u0) is zero");
  std::optional<Rational> w =
      base.is_negative() ? std::nullopt : rational_sqrt(base);
  if (!w) throw NotASquareAtBase("q(u0) is not a rational square");

  std::array<Rational, 5> Q = q.shifted(u0);
  for (const Rational& r0 : {*w, -*w}) {
    Rational r1 = Q[1] / (Rational(2) * r0);
    Rational r2 = (Q[2] - r1 * r1) / (Rational(2) * r0);
    Rational lead = Q[4] - r2 * r2;
    if (lead.is_zero()) continue;
    Rational s = -(Q[3] - Rational(2) * r1 * r2) / lead;
    if (s.is_zero()) continue;
    return u0 + s;
  }
  throw DescentStuck("both square-completion sign choices degenerate");
}

}  // namespace heronpairs
