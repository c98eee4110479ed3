#include "heronpairs/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "heronpairs/errors.hpp"

namespace heronpairs {

namespace {

using nlohmann::json;

json cert_to_json_obj(const HeronCertificate& cert) {
  return json{{"a", cert.triangle.a().str()},
              {"b", cert.triangle.b().str()},
              {"c", cert.triangle.c().str()},
              {"area", cert.area.str()},
              {"circumradius", cert.circumradius.str()},
              {"inradius", cert.inradius.str()},
              {"perimeter", cert.perimeter.str()}};
}

json pair_to_json_obj(const TrianglePair& pair) {
  return json{{"kind", std::string(to_string(pair.kind))},
              {"first", cert_to_json_obj(pair.first)},
              {"second", cert_to_json_obj(pair.second)},
              {"shared_circumradius", pair.shared_circumradius.str()},
              {"shared_other", pair.shared_other.str()},
              {"scale_first", pair.scale_first.str()},
              {"scale_second", pair.scale_second.str()}};
}

Rational rational_field(const json& obj, const char* key) {
  if (!obj.contains(key))
    throw ParseError(std::string("missing field '") + key + "'", 0);
  const json& v = obj.at(key);
  if (!v.is_string())
    throw ParseError(std::string("field '") + key + "' must be a string", 0);
  return Rational::parse(v.get<std::string>());
}

HeronCertificate cert_from_json_obj(const json& obj) {
  Triangle tri{rational_field(obj, "a"), rational_field(obj, "b"),
               rational_field(obj, "c")};
  return HeronCertificate{std::move(tri), rational_field(obj, "area"),
                          rational_field(obj, "circumradius"),
                          rational_field(obj, "inradius"),
                          rational_field(obj, "perimeter")};
}

TrianglePair pair_from_json_obj(const json& obj) {
  const json& body = obj.contains("pair") ? obj.at("pair") : obj;
  if (!body.is_object()) throw ParseError("pair must be a JSON object", 0);
  if (!body.contains("kind") || !body.at("kind").is_string())
    throw ParseError("missing pair kind", 0);
  TrianglePair pair{
      cert_from_json_obj(body.at("first")),
      cert_from_json_obj(body.at("second")),
      pair_kind_from_string(body.at("kind").get<std::string>()),
      rational_field(body, "shared_circumradius"),
      rational_field(body, "shared_other"),
      body.contains("scale_first") ? rational_field(body, "scale_first")
                                   : Rational(1),
      body.contains("scale_second") ? rational_field(body, "scale_second")
                                    : Rational(1)};
  return pair;
}

json parse_json(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw ParseError("malformed JSON", 0);
  return parsed;
}

}  // namespace

std::string to_json(const HeronCertificate& cert) {
  return cert_to_json_obj(cert).dump(2) + "\n";
}

std::string to_json(const TrianglePair& pair) {
  return pair_to_json_obj(pair).dump(2) + "\n";
}

std::string to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
  return json{{"checks", checks}, {"all_pass", report.all_pass()}}.dump(2) +
         "\n";
}

std::string to_json(const PairRecord& record) {
  json obj{{"key",
            json::array({record.key_circumradius.str(), record.key_other.str()})},
           {"pair", pair_to_json_obj(record.pair)}};
  return obj.dump();
}

std::string to_json_lines(const std::vector<PairRecord>& records) {
  std::string out;
  for (const PairRecord& rec : records) {
    out += to_json(rec);
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<PairRecord>& records) {
  std::ostringstream out;
  out << "kind,a1,b1,c1,a2,b2,c2,circumradius,other\n";
  for (const PairRecord& rec : records) {
    const Triangle& t1 = rec.pair.first.triangle;
    const Triangle& t2 = rec.pair.second.triangle;
    out << to_string(rec.pair.kind) << ',' << t1.a() << ',' << t1.b() << ','
        << t1.c() << ',' << t2.a() << ',' << t2.b() << ',' << t2.c() << ','
        << rec.key_circumradius << ',' << rec.key_other << '\n';
  }
  return out.str();
}

TrianglePair pair_from_json(const std::string& text) {
  return pair_from_json_obj(parse_json(text));
}

std::vector<TrianglePair> pairs_from_json_lines(const std::string& text) {
  std::vector<TrianglePair> pairs;
  // Try the whole text first: a single (possibly pretty-printed) object.
  json whole = json::parse(text, nullptr, false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (const json& item : whole) pairs.push_back(pair_from_json_obj(item));
    } else {
      pairs.push_back(pair_from_json_obj(whole));
    }
    return pairs;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json parsed = json::parse(line, nullptr, false);
    if (parsed.is_discarded())
      throw ParseError("malformed JSON", line_no);
    pairs.push_back(pair_from_json_obj(parsed));
  }
  return pairs;
}

}  // namespace heronpairs
