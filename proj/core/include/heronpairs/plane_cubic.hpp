#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "heronpairs/rational.hpp"

namespace heronpairs {

// A rational point in the (y1, y2) plane, intended to lie on some cubic.
struct CurvePoint {
  Rational y1;
  Rational y2;

  bool operator==(const CurvePoint& o) const = default;
};

// Exact bivariate cubic F(y1, y2) = sum c[i][j] y1^i y2^j over i + j <= 3.
class PlaneCubic {
 public:
  PlaneCubic() = default;

  const Rational& coeff(int i, int j) const { return c_[idx(i, j)]; }
  void set_coeff(int i, int j, Rational v) { c_[idx(i, j)] = std::move(v); }
  void add_coeff(int i, int j, const Rational& v) { c_[idx(i, j)] += v; }

  // Some coefficient of total degree 3 is nonzero.
  bool is_cubic() const;

  Rational evaluate(const CurvePoint& p) const;
  // Gradient (dF/dy1, dF/dy2) at p.
  std::array<Rational, 2> gradient(const CurvePoint& p) const;

  // Coefficients of s^0..s^3 of F(p + s*d) along the line through p with
  // direction d.
  std::array<Rational, 4> restrict_to_line(const CurvePoint& p,
                                           const std::array<Rational, 2>& d) const;

 private:
  static std::size_t idx(int i, int j);
  std::array<Rational, 10> c_{};  // (i, j) with i + j <= 3
};

// Third intersection of the tangent line at p with the curve. The tangent is
// parametrized as p + s*(dF/dy2, -dF/dy1), so vertical tangents need no
// special case; s = 0 is a double root of the restricted cubic and the third
// root is read off by Vieta. Throws SingularPoint when the gradient vanishes,
// InflectionOrDegenerate when the third intersection is at infinity or p is
// a flex.
CurvePoint tangent_third_point(const PlaneCubic& curve, const CurvePoint& p);

// Third intersection of the chord through p and q (both on the curve) with
// the curve. Throws DegenerateChord for p = q, a chord contained in the
// curve, or a third intersection at infinity.
CurvePoint chord_third_point(const PlaneCubic& curve, const CurvePoint& p,
                             const CurvePoint& q);

// Produces up to `steps` new rational points from the known ones by
// iterating the tangent and chord process: tangent at the newest point
// first, then chords between the newest point and each earlier one,
// deduplicating by exact coordinates. Stops early when every move
// degenerates; throws Exhausted when not a single new point can be made.
std::vector<CurvePoint> descend_further(const PlaneCubic& curve,
                                        const std::vector<CurvePoint>& known,
                                        std::size_t steps);

}  // namespace heronpairs
