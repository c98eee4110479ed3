#pragma once

#include <cstddef>
#include <vector>

#include "heronpairs/pair.hpp"
#include "heronpairs/plane_cubic.hpp"
#include "heronpairs/quartic.hpp"

namespace heronpairs {

// Constructive solvers: derive triangle pairs from scratch by tangent/chord
// descent on the condition cubics (common R+P, common R+r) and by Fermat's
// quartic descent (common R+A). Each end-to-end solver reproduces the
// corresponding closed-form family up to joint-primitive similarity; the
// parameter m only scales the similarity class.

// The common-circumradius condition as a cubic in (y1, y2) after both
// perimeters are set to m, i.e.
//   (t1^2+1)(4 y1^2 t1^2 + m^2)(2 y2 t2^2 + m) t2
//     = (t2^2+1)(4 y2^2 t2^2 + m^2)(2 y1 t1^2 + m) t1.
PlaneCubic cubic_rp(const Rational& t1, const Rational& t2, const Rational& m);
// (-m/(2 t1^2), -m/(2 t2^2)); lies on cubic_rp by construction.
CurvePoint cubic_rp_base_point(const Rational& t1, const Rational& t2,
                               const Rational& m);

// The common-circumradius condition as a cubic in (y1, y2) after both
// inradii are set to m via x1 = m t1, x2 = m t2.
PlaneCubic cubic_rr(const Rational& t1, const Rational& t2, const Rational& m);
// (t2 m, t1 m); lies on cubic_rr by construction.
CurvePoint cubic_rr_base_point(const Rational& t1, const Rational& t2,
                               const Rational& m);

// Recover the triangle pair encoded by a rational point on the respective
// cubic: x_i = t_i^2 y_i (m - 2 y_i)/(2 t_i^2 y_i + m) for the R+P curve,
// x_i = m t_i for the R+r curve, then sides via the (x, y, t)
// parametrization.
TrianglePair pair_from_rp_point(const Rational& t1, const Rational& t2,
                                const Rational& m, const CurvePoint& pt);
TrianglePair pair_from_rr_point(const Rational& t1, const Rational& t2,
                                const Rational& m, const CurvePoint& pt);

// Full constructions: tangent at the base point, third intersection, pair.
TrianglePair solve_rp(const Rational& t1, const Rational& t2, const Rational& m);
TrianglePair solve_rr(const Rational& t1, const Rational& t2, const Rational& m);

// The quartic q(u) whose square values give common-R+A pairs; q(1) is the
// square (2t(t^2-1))^2. Requires t not in {0, 1, -1}.
QuarticPoly quartic_ra(const Rational& t);

// Pair from a u with q(u) a rational square; free scalings n, q.
TrianglePair pair_from_ra_u(const Rational& t, const Rational& u,
                            const Rational& n, const Rational& q);

// One Fermat step from u = 1, then the pair. n = q = 1 loses no generality
// for the similarity class.
TrianglePair solve_ra(const Rational& t);
TrianglePair solve_ra(const Rational& t, const Rational& n, const Rational& q);

// Distinct u values from iterating Fermat's step starting at u = 1 (the
// starting value itself is not reported). A stuck descent returns the
// partial sequence.
std::vector<Rational> solve_ra_iterate(const Rational& t, std::size_t steps);

}  // namespace heronpairs
