#include "heronpairs/solvers.hpp"

#include <utility>

#include "heronpairs/errors.hpp"
#include "heronpairs/triangle.hpp"

namespace heronpairs {

namespace {

void require_params(const Rational& t1, const Rational& t2, const Rational& m) {
  if (t1.is_zero()) throw DegenerateParam("t1 = 0");
  if (t2.is_zero()) throw DegenerateParam("t2 = 0");
  if (m.is_zero()) throw DegenerateParam("m = 0");
}

}  // namespace

PlaneCubic cubic_rp(const Rational& t1, const Rational& t2, const Rational& m) {
  require_params(t1, t2, m);
  PlaneCubic f;
  Rational s1 = t1 * t1;
  Rational s2 = t2 * t2;
  Rational lhs = t2 * (s1 + 1);
  f.add_coeff(2, 1, lhs * 8 * s1 * s2);
  f.add_coeff(2, 0, lhs * 4 * s1 * m);
  f.add_coeff(0, 1, lhs * 2 * s2 * m * m);
  f.add_coeff(0, 0, lhs * m * m * m);
  Rational rhs = t1 * (s2 + 1);
  f.add_coeff(1, 2, -(rhs * 8 * s1 * s2));
  f.add_coeff(0, 2, -(rhs * 4 * s2 * m));
  f.add_coeff(1, 0, -(rhs * 2 * s1 * m * m));
  f.add_coeff(0, 0, -(rhs * m * m * m));
  return f;
}

CurvePoint cubic_rp_base_point(const Rational& t1, const Rational& t2,
                               const Rational& m) {
  require_params(t1, t2, m);
  return CurvePoint{-m / (2 * t1 * t1), -m / (2 * t2 * t2)};
}

PlaneCubic cubic_rr(const Rational& t1, const Rational& t2, const Rational& m) {
  require_params(t1, t2, m);
  PlaneCubic f;
  Rational q1 = t1 * t1 + 1;
  Rational q2 = t2 * t2 + 1;
  f.set_coeff(2, 1, t2 * q1);
  f.set_coeff(1, 2, -(t1 * q2));
  f.set_coeff(2, 0, -(m * q1));
  f.set_coeff(0, 2, m * q2);
  f.set_coeff(1, 0, -(m * m * t1 * q2));
  f.set_coeff(0, 1, m * m * t2 * q1);
  f.set_coeff(0, 0, -(m * m * m * (t1 - t2) * (t1 + t2)));
  return f;
}

CurvePoint cubic_rr_base_point(const Rational& t1, const Rational& t2,
                               const Rational& m) {
  require_params(t1, t2, m);
  return CurvePoint{t2 * m, t1 * m};
}

TrianglePair pair_from_rp_point(const Rational& t1, const Rational& t2,
                                const Rational& m, const CurvePoint& pt) {
  require_params(t1, t2, m);
  auto recover_x = [&m](const Rational& t, const Rational& y) {
    Rational den = 2 * t * t * y + m;
    if (den.is_zero()) throw DegenerateParam("2*t^2*y + m = 0");
    return t * t * y * (m - 2 * y) / den;
  };
  Rational x1 = recover_x(t1, pt.y1);
  Rational x2 = recover_x(t2, pt.y2);
  return assemble_pair(PairKind::CommonRP,
                       param_sides_raw({x1, pt.y1, t1}),
                       param_sides_raw({x2, pt.y2, t2}));
}

TrianglePair pair_from_rr_point(const Rational& t1, const Rational& t2,
                                const Rational& m, const CurvePoint& pt) {
  require_params(t1, t2, m);
  return assemble_pair(PairKind::CommonRr,
                       param_sides_raw({m * t1, pt.y1, t1}),
                       param_sides_raw({m * t2, pt.y2, t2}));
}

TrianglePair solve_rp(const Rational& t1, const Rational& t2, const Rational& m) {
  PlaneCubic curve = cubic_rp(t1, t2, m);
  CurvePoint pt = tangent_third_point(curve, cubic_rp_base_point(t1, t2, m));
  return pair_from_rp_point(t1, t2, m, pt);
}

TrianglePair solve_rr(const Rational& t1, const Rational& t2, const Rational& m) {
  PlaneCubic curve = cubic_rr(t1, t2, m);
  CurvePoint pt = tangent_third_point(curve, cubic_rr_base_point(t1, t2, m));
  return pair_from_rr_point(t1, t2, m, pt);
}

QuarticPoly quartic_ra(const Rational& t) {
  if (t.is_zero()) throw DegenerateParam("t = 0");
  if (t == Rational(1)) throw DegenerateParam("t - 1 = 0");
  if (t == Rational(-1)) throw DegenerateParam("t + 1 = 0");
  Rational even = pow((t + 1) * (t - 1) * t, 2);
  Rational odd = (t * t + 2 * t - 1) * (t * t - 2 * t - 1) * (t - 1) * (t + 1) * t;
  return QuarticPoly{{-even, -odd, 6 * even, odd, -even}};
}

TrianglePair pair_from_ra_u(const Rational& t, const Rational& u,
                            const Rational& n, const Rational& q) {
  if (n.is_zero()) throw DegenerateParam("n = 0");
  if (q.is_zero()) throw DegenerateParam("q = 0");
  Rational m = t * n;
  Rational p = u * q;
  Rational plus = m * m + 2 * m * n - n * n;
  Rational minus = m * m - 2 * m * n - n * n;
  Rational norm = m * m + n * n;
  Rational shared_side = norm * (p * p + q * q);
  return assemble_pair(
      PairKind::CommonRA,
      {plus * p * p - minus * p * q, minus * p * q + plus * q * q, shared_side},
      {minus * p * p + plus * p * q, plus * p * q - minus * q * q, shared_side});
}

TrianglePair solve_ra(const Rational& t) { return solve_ra(t, 1, 1); }

TrianglePair solve_ra(const Rational& t, const Rational& n, const Rational& q) {
  Rational u = fermat_quartic_step(quartic_ra(t), Rational(1));
  return pair_from_ra_u(t, u, n, q);
}

std::vector<Rational> solve_ra_iterate(const Rational& t, std::size_t steps) {
  QuarticPoly quartic = quartic_ra(t);
  std::vector<Rational> values;
  std::vector<Rational> seen{Rational(1)};
  Rational u(1);
  while (values.size() < steps) {
    Rational next;
    try {
      next = fermat_quartic_step(quartic, u);
    } catch (const Degenerate&) {
      break;
    }
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) break;
    seen.push_back(next);
    values.push_back(next);
    u = std::move(next);
  }
  return values;
}

}  // namespace heronpairs
