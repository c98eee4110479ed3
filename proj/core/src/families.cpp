#include "heronpairs/families.hpp"

#include <array>
#include <string>

#include "heronpairs/errors.hpp"

namespace heronpairs {

namespace {

// t^0 .. t^16; large enough for every family polynomial.
std::array<Rational, 17> powers(const Rational& t) {
  std::array<Rational, 17> p;
  p[0] = Rational(1);
  for (std::size_t k = 1; k < p.size(); ++k) p[k] = p[k - 1] * t;
  return p;
}

void require_nonzero(const Rational& v, const char* factor) {
  if (v.is_zero())
    throw DegenerateFamily(std::string("vanishing factor: ") + factor);
}

struct RpParts {
  Rational q1, q2, fA, fB, fC, fD;
  std::array<Rational, 17> p1, p2;
};

RpParts rp_parts(const Rational& t1, const Rational& t2) {
  require_nonzero(t1, "t1");
  require_nonzero(t2, "t2");
  RpParts w{.q1 = t1 * t1 + 1, .q2 = t2 * t2 + 1,
            .fA = {}, .fB = {}, .fC = {}, .fD = {},
            .p1 = powers(t1), .p2 = powers(t2)};
  const auto& p1 = w.p1;
  const auto& p2 = w.p2;
  w.fA = p1[4] * p2[4] + 3 * p1[4] * p2[2] + 4 * p1[3] * p2[3] +
         3 * p1[2] * p2[4] + p1[4] + 2 * p1[3] * p2[1] + 3 * p1[2] * p2[2] +
         2 * p1[1] * p2[3] + p2[4];
  w.fB = 4 * p1[6] * p2[6] + 5 * p1[6] * p2[4] - 2 * p1[5] * p2[5] +
         5 * p1[4] * p2[6] + 3 * p1[6] * p2[2] - 2 * p1[5] * p2[3] +
         2 * p1[4] * p2[4] - 2 * p1[3] * p2[5] + 3 * p1[2] * p2[6] + p1[6] -
         2 * p1[3] * p2[3] + p2[6];
  w.fC = p1[2] * p2[2] + p1[2] + p1[1] * p2[1] + p2[2];
  w.fD = 3 * p1[4] * p2[4] + 3 * p1[4] * p2[2] + 3 * p1[2] * p2[4] + p1[4] +
         p1[2] * p2[2] + p2[4];
  return w;
}

struct RrFactors {
  Rational q1, q2, k, f1, f2, f3, f4, f5, f6;
};

RrFactors rr_factors(const Rational& t1, const Rational& t2) {
  require_nonzero(t1, "t1");
  require_nonzero(t2, "t2");
  Rational s1 = t1 * t1;
  Rational s2 = t2 * t2;
  Rational t12 = t1 * t2;
  return RrFactors{
      .q1 = s1 + 1,
      .q2 = s2 + 1,
      .k = s1 * s2 + s1 - 8 * t12 + s2 + 9,
      .f1 = t1 * s2 - t1 - 2 * t2,
      .f2 = 2 * t12 - s2 - 3,
      .f3 = s1 * s2 - s1 - 4 * t12 + s2 + 3,
      .f4 = s1 * t2 - 2 * t1 - t2,
      .f5 = s1 - 2 * t12 + 3,
      .f6 = s1 * s2 + s1 - 4 * t12 - s2 + 3,
  };
}

struct RaFactors {
  Rational n, d, e1, e2, f1, f2, g, h1, h2, h3, h4;
};

RaFactors ra_factors(const Rational& t) {
  require_nonzero(t, "t");
  require_nonzero(t - 1, "t - 1");
  require_nonzero(t + 1, "t + 1");
  auto p = powers(t);
  return RaFactors{
      .n = p[8] + 8 * p[7] + 20 * p[6] - 56 * p[5] - 26 * p[4] + 56 * p[3] +
           20 * p[2] - 8 * p[1] + 1,
      .d = p[8] - 8 * p[7] + 20 * p[6] + 56 * p[5] - 26 * p[4] - 56 * p[3] +
           20 * p[2] + 8 * p[1] + 1,
      .e1 = p[4] - 2 * p[2] + 5,
      .e2 = 5 * p[4] - 2 * p[2] + 1,
      .f1 = p[4] - 4 * p[3] + 10 * p[2] - 4 * p[1] + 1,
      .f2 = p[4] + 4 * p[3] + 10 * p[2] + 4 * p[1] + 1,
      .g = p[16] + 104 * p[14] - 548 * p[12] + 3032 * p[10] - 4922 * p[8] +
           3032 * p[6] - 548 * p[4] + 104 * p[2] + 1,
      .h1 = 3 * p[4] - 6 * p[2] - 1,
      .h2 = p[4] + 6 * p[2] - 3,
      .h3 = p[4] - 4 * p[3] - 6 * p[2] - 4 * p[1] + 1,
      .h4 = p[4] + 4 * p[3] - 6 * p[2] + 4 * p[1] + 1,
  };
}

}  // namespace

TrianglePair family_rp(const Rational& t1, const Rational& t2) {
  RpParts w = rp_parts(t1, t2);
  const auto& p1 = w.p1;
  const auto& p2 = w.p2;

  Rational b1i = 3 * p1[5] * p2[4] + p1[4] * p2[5] + 3 * p1[5] * p2[2] +
                 p1[4] * p2[3] + p1[3] * p2[4] - p1[2] * p2[5] + p1[5] +
                 p1[4] * p2[1] + p1[3] * p2[2] - p1[2] * p2[3] -
                 p1[1] * p2[4] - p2[5];
  Rational c1i = 2 * p1[6] * p2[5] + 2 * p1[6] * p2[3] - p1[5] * p2[4] +
                 3 * p1[4] * p2[5] - 3 * p1[5] * p2[2] + p1[4] * p2[3] +
                 p1[3] * p2[4] + 3 * p1[2] * p2[5] - p1[5] - p1[4] * p2[1] -
                 p1[3] * p2[2] + p1[2] * p2[3] + p1[1] * p2[4] + p2[5];
  Rational b2i = p1[5] * p2[4] + 3 * p1[4] * p2[5] - p1[5] * p2[2] +
                 p1[4] * p2[3] + p1[3] * p2[4] + 3 * p1[2] * p2[5] - p1[5] -
                 p1[4] * p2[1] - p1[3] * p2[2] + p1[2] * p2[3] +
                 p1[1] * p2[4] + p2[5];
  Rational c2i = 2 * p1[5] * p2[6] + 3 * p1[5] * p2[4] - p1[4] * p2[5] +
                 2 * p1[3] * p2[6] + 3 * p1[5] * p2[2] + p1[4] * p2[3] +
                 p1[3] * p2[4] - 3 * p1[2] * p2[5] + p1[5] + p1[4] * p2[1] +
                 p1[3] * p2[2] - p1[2] * p2[3] - p1[1] * p2[4] - p2[5];

  std::array<Rational, 3> first{
      t1 * w.q2 * w.fA * w.fB,
      2 * t1 * p2[3] * w.q1 * w.q1 * w.q2 * w.fC * b1i,
      t1 * (t1 + t2) * w.q2 * w.fD * c1i,
  };
  std::array<Rational, 3> second{
      t2 * w.q1 * w.fA * w.fB,
      2 * p1[3] * t2 * w.q1 * w.q2 * w.q2 * w.fC * b2i,
      t2 * (t1 + t2) * w.q1 * w.fD * c2i,
  };
  return assemble_pair(PairKind::CommonRP, first, second);
}

SharedClosedForm family_rp_shared(const Rational& t1, const Rational& t2) {
  RpParts w = rp_parts(t1, t2);
  return SharedClosedForm{
      w.q1 * w.q2 * w.fA * w.fB / 4,
      4 * w.p1[3] * w.p2[3] * (t1 + t2) * w.q1 * w.q2 * w.fC * w.fD,
  };
}

TrianglePair family_rp_right(const Rational& t1) {
  require_nonzero(t1, "t1");
  require_nonzero(t1 - 1, "t1 - 1");
  require_nonzero(t1 + 1, "t1 + 1");
  auto p = powers(t1);
  Rational q = p[2] + 1;
  Rational u1 = 5 * p[4] + 6 * p[3] + 6 * p[2] + 2 * p[1] + 1;
  Rational u2 = 13 * p[6] - 4 * p[5] + 7 * p[4] - 4 * p[3] + 3 * p[2] + 1;
  Rational v = 2 * p[2] + p[1] + 1;
  Rational s = 7 * p[4] + 4 * p[2] + 1;

  std::array<Rational, 3> first{
      2 * t1 * u1 * u2,
      4 * t1 * q * q * v * (7 * p[5] + 3 * p[4] + 2 * p[3] - 2 * p[2] - p[1] - 1),
      2 * t1 * (t1 + 1) * s * (4 * p[6] - 5 * p[5] + 3 * p[4] + 4 * p[2] + p[1] + 1),
  };
  std::array<Rational, 3> second{
      q * u1 * u2,
      -8 * p[3] * q * v * (p[5] - 3 * p[4] - 4 * p[2] - p[1] - 1),
      (t1 + 1) * q * s * (9 * p[5] + p[4] + 4 * p[3] - 4 * p[2] - p[1] - 1),
  };
  return assemble_pair(PairKind::CommonRP, first, second);
}

SharedClosedForm family_rp_right_shared(const Rational& t1) {
  auto p = powers(t1);
  Rational q = p[2] + 1;
  return SharedClosedForm{
      q * (5 * p[4] + 6 * p[3] + 6 * p[2] + 2 * p[1] + 1) *
          (13 * p[6] - 4 * p[5] + 7 * p[4] - 4 * p[3] + 3 * p[2] + 1) /
          Rational(2),
      8 * p[3] * (t1 + 1) * q * (2 * p[2] + p[1] + 1) *
          (7 * p[4] + 4 * p[2] + 1),
  };
}

TrianglePair family_rr(const Rational& t1, const Rational& t2) {
  RrFactors f = rr_factors(t1, t2);
  require_nonzero(f.k, "t1^2*t2^2 + t1^2 - 8*t1*t2 + t2^2 + 9");
  require_nonzero(f.f1, "t1*t2^2 - t1 - 2*t2");
  require_nonzero(f.f2, "2*t1*t2 - t2^2 - 3");
  require_nonzero(f.f3, "t1^2*t2^2 - t1^2 - 4*t1*t2 + t2^2 + 3");
  require_nonzero(f.f4, "t1^2*t2 - 2*t1 - t2");
  require_nonzero(f.f5, "t1^2 - 2*t1*t2 + 3");
  require_nonzero(f.f6, "t1^2*t2^2 + t1^2 - 4*t1*t2 - t2^2 + 3");

  std::array<Rational, 3> first{
      t1 * f.q2 * f.k,
      -(f.f1 * f.q1 * f.f2),
      -2 * f.f3 * f.f4,
  };
  std::array<Rational, 3> second{
      t2 * f.q1 * f.k,
      f.f4 * f.q2 * f.f5,
      -2 * f.f6 * f.f1,
  };
  return assemble_pair(PairKind::CommonRr, first, second);
}

SharedClosedForm family_rr_shared(const Rational& t1, const Rational& t2) {
  RrFactors f = rr_factors(t1, t2);
  return SharedClosedForm{f.q1 * f.q2 * f.k / 4, 2 * f.f1 * f.f4};
}

TrianglePair family_rr_right(const Rational& t1) {
  require_nonzero(t1, "t1");
  require_nonzero(t1 - 1, "t1 - 1");
  require_nonzero(t1 - 2, "t1 - 2");
  Rational s = t1 * t1;
  Rational disc = s - 2 * t1 - 1;
  require_nonzero(disc, "t1^2 - 2*t1 - 1");

  std::array<Rational, 3> first{
      2 * t1 * (s - 4 * t1 + 5),
      2 * (s + 1) * (t1 - 2),
      4 * (t1 - 1) * disc,
  };
  std::array<Rational, 3> second{
      (s + 1) * (s - 4 * t1 + 5),
      disc * (s - 2 * t1 + 3),
      4 * (t1 - 1) * (t1 - 1),
  };
  return assemble_pair(PairKind::CommonRr, first, second);
}

SharedClosedForm family_rr_right_shared(const Rational& t1) {
  Rational s = t1 * t1;
  return SharedClosedForm{(s + 1) * (s - 4 * t1 + 5) / 2,
                          2 * (s - 2 * t1 - 1)};
}

TrianglePair family_ra(const Rational& t) {
  RaFactors f = ra_factors(t);
  Rational shared_side = (t * t + 1) * f.g;
  std::array<Rational, 3> first{
      2 * t * f.e1 * f.e2 * f.n,
      (t - 1) * (t + 1) * f.f1 * f.f2 * f.d,
      shared_side,
  };
  std::array<Rational, 3> second{
      (t - 1) * (t + 1) * f.f1 * f.f2 * f.n,
      2 * t * f.e1 * f.e2 * f.d,
      shared_side,
  };
  return assemble_pair(PairKind::CommonRA, first, second);
}

SharedClosedForm family_ra_shared(const Rational& t) {
  RaFactors f = ra_factors(t);
  return SharedClosedForm{
      (t * t + 1) * f.e1 * f.e2 * f.f1 * f.f2 * f.n * f.d /
          (2 * f.h1 * f.h2 * f.h3 * f.h4),
      t * (t - 1) * (t + 1) * f.h1 * f.h2 * f.h3 * f.h4 * f.g,
  };
}

}  // namespace heronpairs
