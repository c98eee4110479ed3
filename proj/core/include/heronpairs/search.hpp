#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "heronpairs/pair.hpp"

namespace heronpairs {

// Independent brute-force oracle over integer-sided Heron triangles. The
// enumeration is deliberately dumb: every a <= b <= c <= max_side is tried
// and the Heron product tested for squareness in 64-bit integers.

struct SearchConfig {
  int max_side = 3;  // >= 3
  std::set<PairKind> kinds{PairKind::CommonRP, PairKind::CommonRr,
                           PairKind::CommonRA};
  bool primitive_only = false;
  bool scalene_only = false;
};

struct PairRecord {
  TrianglePair pair;
  Rational key_circumradius;
  Rational key_other;
};

// Every integer triangle a <= b <= c <= max_side with rational (hence
// half-integral) area, exactly certified, in ascending (c, b, a) order.
void enumerate_heron(int max_side,
                     const std::function<void(const HeronCertificate&)>& yield);
std::vector<HeronCertificate> enumerate_heron(int max_side);

// All unordered pairs of distinct enumerated triangles sharing the exact
// (R, P), (R, r) or (R, A) key, per requested kind; deterministic order
// (kind, then key ascending, then enumeration order). `threads` > 1 shards
// the enumeration by largest side; the merged result is identical to the
// single-threaded one.
std::vector<PairRecord> find_pairs(const SearchConfig& cfg, unsigned threads = 1);

// True iff both triangles fit within cfg.max_side and find_pairs emits
// exactly this pair (as an unordered pair of sorted side triples) under its
// key. Throws OutOfBounds when a side exceeds the bound.
bool cross_check_family(const TrianglePair& pair, const SearchConfig& cfg);

}  // namespace heronpairs
