#pragma once

#include "heronpairs/pair.hpp"

namespace heronpairs {

// Closed-form parametric families of non-congruent Heron triangle pairs
// sharing a circumradius plus a second invariant. Each family evaluates the
// printed side polynomials exactly at the given rational parameters and
// returns the jointly-primitive pair (see assemble_pair). Parameters on an
// excluded locus raise DegenerateFamily naming the vanishing factor;
// congruent outputs raise DegenerateFamily as well.

// Common circumradius and perimeter, two free parameters.
TrianglePair family_rp(const Rational& t1, const Rational& t2);

// The t2 = 1 specialization: the second triangle is right-angled.
// Requires t1 not in {0, 1, -1}.
TrianglePair family_rp_right(const Rational& t1);

// Common circumradius and inradius, two free parameters.
TrianglePair family_rr(const Rational& t1, const Rational& t2);

// The t2 = 1 specialization: the second triangle is right-angled.
TrianglePair family_rr_right(const Rational& t1);

// Common circumradius and area, one free parameter, t not in {0, 1, -1}.
// Both raw triangles share their third side by construction.
TrianglePair family_ra(const Rational& t);

// The displayed closed forms for a family's shared circumradius and second
// invariant, evaluated before scaling. Valid up to a global sign: for an
// assembled pair, shared_circumradius = |circumradius| * scale and
// shared_other = |other| * scale (scale^2 for the CommonRA area).
struct SharedClosedForm {
  Rational circumradius;
  Rational other;
};

SharedClosedForm family_rp_shared(const Rational& t1, const Rational& t2);
SharedClosedForm family_rp_right_shared(const Rational& t1);
SharedClosedForm family_rr_shared(const Rational& t1, const Rational& t2);
SharedClosedForm family_rr_right_shared(const Rational& t1);
SharedClosedForm family_ra_shared(const Rational& t);

}  // namespace heronpairs
