#include "heronpairs/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "heronpairs/errors.hpp"

namespace heronpairs {

namespace {

// 3 * max_side^4 must stay below 2^63.
constexpr int kMaxSearchBound = 30000;

std::int64_t isqrt64(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct HeronHit {
  std::int64_t a, b, c;
  std::int64_t four_area;  // 4A, the integer square root of the Heron product
};

void check_bound(int max_side) {
  if (max_side < 3) throw std::invalid_argument("max_side must be >= 3");
  if (max_side > kMaxSearchBound)
    throw std::invalid_argument("max_side too large for 64-bit enumeration");
}

// All Heron hits with c in [c_lo, c_hi], ascending (c, b, a).
std::vector<HeronHit> enumerate_range(std::int64_t c_lo, std::int64_t c_hi) {
  std::vector<HeronHit> hits;
  for (std::int64_t c = c_lo; c <= c_hi; ++c)
    for (std::int64_t b = 1; b <= c; ++b)
      for (std::int64_t a = c - b + 1; a <= b; ++a) {
        std::int64_t product =
            (a + b + c) * (a + b - c) * (b + c - a) * (c + a - b);
        std::int64_t root = isqrt64(product);
        if (root * root == product) hits.push_back({a, b, c, root});
      }
  return hits;
}

HeronCertificate certificate_from_hit(const HeronHit& h) {
  Triangle tri{Rational(h.a), Rational(h.b), Rational(h.c)};
  Rational area(h.four_area, 4);
  Rational circumradius(BigInt(h.a) * h.b * h.c, h.four_area);
  Rational inradius(h.four_area, 2 * (h.a + h.b + h.c));
  Rational perimeter(h.a + h.b + h.c);
  return HeronCertificate{std::move(tri), std::move(area),
                          std::move(circumradius), std::move(inradius),
                          std::move(perimeter)};
}

std::vector<HeronHit> enumerate_hits(int max_side, unsigned threads) {
  check_bound(max_side);
  if (threads <= 1) return enumerate_range(1, max_side);

  // Shard by largest side; contiguous stripes merge back in (c, b, a) order.
  unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(max_side));
  std::vector<std::vector<HeronHit>> parts(n);
  std::vector<std::thread> workers;
  workers.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    std::int64_t lo = 1 + static_cast<std::int64_t>(max_side) * i / n;
    std::int64_t hi = static_cast<std::int64_t>(max_side) * (i + 1) / n;
    workers.emplace_back(
        [lo, hi, &part = parts[i]] { part = enumerate_range(lo, hi); });
  }
  for (std::thread& w : workers) w.join();

  std::vector<HeronHit> hits;
  for (std::vector<HeronHit>& part : parts)
    hits.insert(hits.end(), part.begin(), part.end());
  return hits;
}

Rational hit_key_other(const HeronHit& h, PairKind kind) {
  switch (kind) {
    case PairKind::CommonRP: return Rational(h.a + h.b + h.c);
    case PairKind::CommonRr: return Rational(h.four_area, 2 * (h.a + h.b + h.c));
    case PairKind::CommonRA: return Rational(h.four_area, 4);
  }
  throw std::invalid_argument("unknown pair kind");
}

bool hit_primitive(const HeronHit& h) {
  return std::gcd(std::gcd(h.a, h.b), h.c) == 1;
}

bool hit_scalene(const HeronHit& h) {
  return h.a != h.b && h.b != h.c && h.a != h.c;
}

}  // namespace

void enumerate_heron(int max_side,
                     const std::function<void(const HeronCertificate&)>& yield) {
  check_bound(max_side);
  for (const HeronHit& h : enumerate_range(1, max_side))
    yield(certificate_from_hit(h));
}

std::vector<HeronCertificate> enumerate_heron(int max_side) {
  std::vector<HeronCertificate> out;
  enumerate_heron(max_side,
                  [&out](const HeronCertificate& c) { out.push_back(c); });
  return out;
}

std::vector<PairRecord> find_pairs(const SearchConfig& cfg, unsigned threads) {
  std::vector<HeronHit> hits = enumerate_hits(cfg.max_side, threads);
  if (cfg.primitive_only)
    std::erase_if(hits, [](const HeronHit& h) { return !hit_primitive(h); });
  if (cfg.scalene_only)
    std::erase_if(hits, [](const HeronHit& h) { return !hit_scalene(h); });

  std::vector<PairRecord> records;
  for (PairKind kind :
       {PairKind::CommonRP, PairKind::CommonRr, PairKind::CommonRA}) {
    if (!cfg.kinds.contains(kind)) continue;

    std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      Rational circumradius(BigInt(hits[i].a) * hits[i].b * hits[i].c,
                            hits[i].four_area);
      groups[{std::move(circumradius), hit_key_other(hits[i], kind)}].push_back(i);
    }
    for (const auto& [key, members] : groups) {
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          // Enumeration emits each sorted triple once, so distinct hits in a
          // group are automatically non-congruent.
          TrianglePair pair{certificate_from_hit(hits[members[i]]),
                            certificate_from_hit(hits[members[j]]),
                            kind,
                            key.first,
                            key.second,
                            Rational(1),
                            Rational(1)};
          records.push_back({std::move(pair), key.first, key.second});
        }
    }
  }
  return records;
}

bool cross_check_family(const TrianglePair& pair, const SearchConfig& cfg) {
  std::array<Rational, 6> sides;
  {
    auto s1 = pair.first.triangle.sides();
    auto s2 = pair.second.triangle.sides();
    std::copy(s2.begin(), s2.end(),
              std::copy(s1.begin(), s1.end(), sides.begin()));
  }
  for (const Rational& s : sides) {
    if (!s.is_integer())
      throw std::invalid_argument("cross-check requires integer (primitive) sides");
    if (s.num() > cfg.max_side)
      throw OutOfBounds("side " + s.str() + " exceeds max_side " +
                        std::to_string(cfg.max_side));
  }

  SearchConfig narrowed = cfg;
  narrowed.kinds = {pair.kind};
  auto want1 = pair.first.triangle.sorted_sides();
  auto want2 = pair.second.triangle.sorted_sides();
  for (const PairRecord& rec : find_pairs(narrowed)) {
    auto got1 = rec.pair.first.triangle.sorted_sides();
    auto got2 = rec.pair.second.triangle.sorted_sides();
    bool same_triangles = (got1 == want1 && got2 == want2) ||
                          (got1 == want2 && got2 == want1);
    if (same_triangles && rec.key_circumradius == pair.shared_circumradius &&
        rec.key_other == pair.shared_other)
      return true;
  }
  return false;
}

}  // namespace heronpairs
