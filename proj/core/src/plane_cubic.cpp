#include "heronpairs/plane_cubic.hpp"

#include <algorithm>
#include <stdexcept>

#include "heronpairs/errors.hpp"

namespace heronpairs {

std::size_t PlaneCubic::idx(int i, int j) {
  if (i < 0 || j < 0 || i + j > 3) throw std::out_of_range("cubic exponent");
  // Row-major over the triangle {(i,j): i+j<=3}: rows i = 0..3.
  static constexpr int row_start[4] = {0, 4, 7, 9};
  return static_cast<std::size_t>(row_start[i] + j);
}

bool PlaneCubic::is_cubic() const {
  return !coeff(3, 0).is_zero() || !coeff(2, 1).is_zero() ||
         !coeff(1, 2).is_zero() || !coeff(0, 3).is_zero();
}

Rational PlaneCubic::evaluate(const CurvePoint& p) const {
  Rational acc;
  for (int i = 0; i + 0 <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      const Rational& c = coeff(i, j);
      if (c.is_zero()) continue;
      acc += c * pow(p.y1, i) * pow(p.y2, j);
    }
  return acc;
}

std::array<Rational, 2> PlaneCubic::gradient(const CurvePoint& p) const {
  Rational d1, d2;
  for (int i = 0; i + 0 <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      const Rational& c = coeff(i, j);
      if (c.is_zero()) continue;
      if (i > 0) d1 += c * Rational(i) * pow(p.y1, i - 1) * pow(p.y2, j);
      if (j > 0) d2 += c * Rational(j) * pow(p.y1, i) * pow(p.y2, j - 1);
    }
  return {std::move(d1), std::move(d2)};
}

std::array<Rational, 4> PlaneCubic::restrict_to_line(
    const CurvePoint& p, const std::array<Rational, 2>& d) const {
  // Expand (p1 + s d1)^i (p2 + s d2)^j per monomial; i, j <= 3 so binomial
  // coefficients are small constants.
  static constexpr int binom[4][4] = {
      {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  std::array<Rational, 4> out{};
  for (int i = 0; i + 0 <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      const Rational& c = coeff(i, j);
      if (c.is_zero()) continue;
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l) {
          Rational term = c * Rational(binom[i][k] * binom[j][l]) *
                          pow(p.y1, i - k) * pow(d[0], k) *
                          pow(p.y2, j - l) * pow(d[1], l);
          out[static_cast<std::size_t>(k + l)] += term;
        }
    }
  return out;
}

CurvePoint tangent_third_point(const PlaneCubic& curve, const CurvePoint& p) {
  if (!curve.evaluate(p).is_zero())
    throw std::invalid_argument("tangent base point not on curve");
  std::array<Rational, 2> grad = curve.gradient(p);
  if (grad[0].is_zero() && grad[1].is_zero())
    throw SingularPoint("gradient vanishes at the point");
  std::array<Rational, 2> dir{grad[1], -grad[0]};
  std::array<Rational, 4> cs = curve.restrict_to_line(p, dir);
  // cs[0] = F(p) = 0 and cs[1] = <grad, dir> = 0, so s = 0 is a double root.
  if (cs[3].is_zero())
    throw InflectionOrDegenerate("third intersection at infinity");
  Rational s = -cs[2] / cs[3];
  if (s.is_zero())
    throw InflectionOrDegenerate("flex: tangent meets the curve only at the point");
  return CurvePoint{p.y1 + s * dir[0], p.y2 + s * dir[1]};
}

CurvePoint chord_third_point(const PlaneCubic& curve, const CurvePoint& p,
                             const CurvePoint& q) {
  if (p == q) throw DegenerateChord("coincident chord endpoints");
  if (!curve.evaluate(p).is_zero() || !curve.evaluate(q).is_zero())
    throw std::invalid_argument("chord endpoint not on curve");
  std::array<Rational, 2> dir{q.y1 - p.y1, q.y2 - p.y2};
  std::array<Rational, 4> cs = curve.restrict_to_line(p, dir);
  if (cs[3].is_zero()) {
    bool contained = cs[0].is_zero() && cs[1].is_zero() && cs[2].is_zero();
    throw DegenerateChord(contained ? "chord is a component of the curve"
                                    : "third intersection at infinity");
  }
  // Roots of the restricted cubic: s = 0 (p), s = 1 (q), and by Vieta the
  // third root is -c2/c3 - 1.
  Rational s = -cs[2] / cs[3] - Rational(1);
  return CurvePoint{p.y1 + s * dir[0], p.y2 + s * dir[1]};
}

std::vector<CurvePoint> descend_further(const PlaneCubic& curve,
                                        const std::vector<CurvePoint>& known,
                                        std::size_t steps) {
  for (const CurvePoint& p : known)
    if (!curve.evaluate(p).is_zero())
      throw std::invalid_argument("known point not on curve");
  if (known.empty()) throw std::invalid_argument("no known points");

  std::vector<CurvePoint> all = known;
  auto seen = [&all](const CurvePoint& p) {
    return std::find(all.begin(), all.end(), p) != all.end();
  };

  std::vector<CurvePoint> produced;
  while (produced.size() < steps) {
    const CurvePoint newest = all.back();
    bool advanced = false;

    auto consider = [&](const CurvePoint& candidate) {
      if (seen(candidate)) return false;
      all.push_back(candidate);
      produced.push_back(candidate);
      return true;
    };

    try {
      if (consider(tangent_third_point(curve, newest))) advanced = true;
    } catch (const Degenerate&) {
    }
    if (!advanced) {
      for (std::size_t i = 0; i + 1 < all.size() && !advanced; ++i) {
        try {
          if (consider(chord_third_point(curve, newest, all[i]))) advanced = true;
        } catch (const Degenerate&) {
        }
      }
    }
    if (!advanced) {
      if (produced.empty() && steps > 0)
        throw Exhausted("no new point can be produced");
      break;
    }
  }
  return produced;
}

}  // namespace heronpairs
