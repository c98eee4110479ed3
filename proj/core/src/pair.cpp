#include "heronpairs/pair.hpp"

#include <algorithm>
#include <utility>

#include "heronpairs/errors.hpp"

namespace heronpairs {

std::string_view to_string(PairKind kind) {
  switch (kind) {
    case PairKind::CommonRP: return "common_rp";
    case PairKind::CommonRr: return "common_rr";
    case PairKind::CommonRA: return "common_ra";
  }
  throw std::invalid_argument("unknown pair kind");
}

PairKind pair_kind_from_string(std::string_view s) {
  if (s == "common_rp") return PairKind::CommonRP;
  if (s == "common_rr") return PairKind::CommonRr;
  if (s == "common_ra") return PairKind::CommonRA;
  throw ParseError("unknown pair kind '" + std::string(s) + "'", 0);
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Rational shared_value(const HeronCertificate& cert, PairKind kind) {
  switch (kind) {
    case PairKind::CommonRP: return cert.perimeter;
    case PairKind::CommonRr: return cert.inradius;
    case PairKind::CommonRA: return cert.area;
  }
  throw std::invalid_argument("unknown pair kind");
}

Rational heron_product(const Triangle& t) {
  return heron_area_squared(t) * Rational(16);
}

}  // namespace

VerificationReport verify_pair(const TrianglePair& pair) {
  VerificationReport report;
  auto add = [&report](std::string name, bool pass) {
    report.checks.push_back({std::move(name), pass});
  };

  std::optional<HeronCertificate> first = certify_heron(pair.first.triangle);
  std::optional<HeronCertificate> second = certify_heron(pair.second.triangle);
  add("first_heron", first.has_value());
  add("second_heron", second.has_value());
  if (!first || !second) return report;

  add("first_certificate_consistent",
      first->area == pair.first.area &&
          first->circumradius == pair.first.circumradius &&
          first->inradius == pair.first.inradius &&
          first->perimeter == pair.first.perimeter);
  add("second_certificate_consistent",
      second->area == pair.second.area &&
          second->circumradius == pair.second.circumradius &&
          second->inradius == pair.second.inradius &&
          second->perimeter == pair.second.perimeter);

  add("circumradius_equal", first->circumradius == second->circumradius &&
                                first->circumradius == pair.shared_circumradius);

  Rational v1 = shared_value(*first, pair.kind);
  Rational v2 = shared_value(*second, pair.kind);
  std::string label;
  switch (pair.kind) {
    case PairKind::CommonRP: label = "perimeter_equal"; break;
    case PairKind::CommonRr: label = "inradius_equal"; break;
    case PairKind::CommonRA: label = "area_equal"; break;
  }
  add(label, v1 == v2 && v1 == pair.shared_other);

  add("non_congruent",
      !pair.first.triangle.congruent_to(pair.second.triangle));

  if (pair.kind == PairKind::CommonRA) {
    const Triangle& t1 = pair.first.triangle;
    const Triangle& t2 = pair.second.triangle;
    add("side_product_equal",
        t1.a() * t1.b() * t1.c() == t2.a() * t2.b() * t2.c());
    add("heron_product_equal", heron_product(t1) == heron_product(t2));
  }
  return report;
}

TrianglePair assemble_pair(PairKind kind, const std::array<Rational, 3>& first,
                           const std::array<Rational, 3>& second) {
  std::array<Rational, 6> sides;
  for (std::size_t i = 0; i < 3; ++i) {
    sides[i] = abs(first[i]);
    sides[i + 3] = abs(second[i]);
    if (sides[i].is_zero() || sides[i + 3].is_zero())
      throw DegenerateFamily("zero side");
  }

  // One common scale for both triangles: all six sides integral, joint gcd 1.
  BigInt l = 1;
  for (const Rational& s : sides) l = boost::multiprecision::lcm(l, s.den());
  BigInt g = 0;
  std::array<BigInt, 6> ints;
  for (std::size_t i = 0; i < 6; ++i) {
    ints[i] = sides[i].num() * (l / sides[i].den());
    g = boost::multiprecision::gcd(g, ints[i]);
  }
  Rational scale = Rational(l) / Rational(g);

  auto make = [&](std::size_t base) {
    try {
      return Triangle(Rational(ints[base]), Rational(ints[base + 1]),
                      Rational(ints[base + 2]));
    } catch (const InvalidSides& e) {
      throw DegenerateFamily(e.what());
    }
  };
  Triangle t1 = make(0);
  Triangle t2 = make(3);
  if (t1.congruent_to(t2)) throw DegenerateFamily("congruent triangles");

  std::optional<HeronCertificate> c1 = certify_heron(t1);
  std::optional<HeronCertificate> c2 = certify_heron(t2);
  if (!c1 || !c2) throw DegenerateFamily("irrational area");

  TrianglePair pair{std::move(*c1), std::move(*c2), kind, Rational(), Rational(),
                    scale, scale};
  if (pair.first.circumradius != pair.second.circumradius)
    throw DegenerateFamily("circumradii differ");
  Rational v1 = shared_value(pair.first, kind);
  if (v1 != shared_value(pair.second, kind))
    throw DegenerateFamily("second invariant differs");
  pair.shared_circumradius = pair.first.circumradius;
  pair.shared_other = std::move(v1);
  return pair;
}

}  // namespace heronpairs
