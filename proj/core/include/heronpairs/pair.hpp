#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "heronpairs/triangle.hpp"

namespace heronpairs {

// Which second invariant the two triangles share besides the circumradius.
enum class PairKind {
  CommonRP,  // common circumradius and perimeter
  CommonRr,  // common circumradius and inradius
  CommonRA,  // common circumradius and area
};

std::string_view to_string(PairKind kind);        // "common_rp" | "common_rr" | "common_ra"
PairKind pair_kind_from_string(std::string_view); // throws ParseError

// Two non-congruent Heron triangles sharing their circumradius and, per
// kind, their perimeter, inradius or area. scale_first/scale_second record
// the positive rational factor relating the raw family/solver sides (after
// per-side sign normalization) to the stored jointly-primitive integer
// sides; both triangles are scaled by the same factor so the shared
// invariants stay shared.
struct TrianglePair {
  HeronCertificate first;
  HeronCertificate second;
  PairKind kind;
  Rational shared_circumradius;
  Rational shared_other;  // perimeter, inradius or area, per kind
  Rational scale_first{1};
  Rational scale_second{1};
};

struct CheckResult {
  std::string name;
  bool pass;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;
};

// Recomputes both certificates from the raw sides and re-checks every pair
// invariant: Heron certification, exact equality of the circumradii and of
// the kind's second invariant against the recorded shared values, and
// non-congruence. For CommonRA pairs the necessary conditions
// a1 b1 c1 = a2 b2 c2 and equality of the two Heron products are always
// checked as well. Failures are report entries, never exceptions.
VerificationReport verify_pair(const TrianglePair& pair);

// Assembles a TrianglePair from two raw side triples as evaluated by a
// closed-form family or a solver: takes per-side absolute values (the
// printed families carry sign-indefinite factors), rejects zero sides,
// non-triangles and congruent pairs with DegenerateFamily, scales both
// triangles by one common rational so all six sides are integers with
// overall gcd 1, certifies, and records the shared invariants.
TrianglePair assemble_pair(PairKind kind, const std::array<Rational, 3>& first,
                           const std::array<Rational, 3>& second);

}  // namespace heronpairs
