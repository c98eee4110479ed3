#pragma once

#include <string>
#include <vector>

#include "heronpairs/pair.hpp"
#include "heronpairs/search.hpp"

namespace heronpairs {

// Exact text interchange. Every rational is serialized as a string "p/q" in
// lowest terms ("p" for integers), never as a floating-point number.

std::string to_json(const HeronCertificate& cert);
std::string to_json(const TrianglePair& pair);
std::string to_json(const VerificationReport& report);

// Single-line JSON object {"key": ["R", "other"], "pair": {...}}.
std::string to_json(const PairRecord& record);
// One record per line.
std::string to_json_lines(const std::vector<PairRecord>& records);
// Lossy convenience: kind, integer sides, key strings.
std::string to_csv(const std::vector<PairRecord>& records);

// Parses a TrianglePair object, accepting the PairRecord wrapper as well.
// Stored certificate values are taken as-is; verify_pair re-derives and
// checks them. Throws ParseError on malformed input.
TrianglePair pair_from_json(const std::string& text);

// Accepts a single JSON object or JSON Lines; returns all pairs found.
std::vector<TrianglePair> pairs_from_json_lines(const std::string& text);

}  // namespace heronpairs
