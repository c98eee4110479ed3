// Command-line surface for the heronpairs library: closed-form families,
// constructive solvers, descent iteration, pair verification and the
// brute-force oracle search. All values are exact rationals; output is JSON
// (or CSV for search results).
//
// Exit codes: 0 success, 1 mathematical degeneracy (the message names the
// vanishing factor), 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heronpairs/errors.hpp"
#include "heronpairs/families.hpp"
#include "heronpairs/search.hpp"
#include "heronpairs/serialize.hpp"
#include "heronpairs/solvers.hpp"

namespace {

using heronpairs::CurvePoint;
using heronpairs::PairKind;
using heronpairs::Rational;
using heronpairs::TrianglePair;

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("HERONPAIRS_OUT_DIR"))
      return std::filesystem::path(dir) / p;
  }
  return p;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path p = resolve_output(output_path);
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot open output file " + p.string());
  out << text;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct FamilyArgs {
  std::string kind;
  std::string t1, t2, t;
  bool right = false;
  std::string output;
};

struct SolveArgs {
  std::string kind;
  std::string t1, t2, t;
  std::string m = "1";
  std::string n = "1", q = "1";
  std::string output;
};

struct DescendArgs {
  std::string kind;
  std::string t1, t2, t;
  std::string m = "1";
  std::size_t steps = 1;
  std::string output;
};

struct VerifyArgs {
  std::string input;
  std::string output;
};

struct SearchArgs {
  int max_side = 0;
  std::vector<std::string> kinds;
  bool primitive_only = false;
  bool scalene_only = false;
  std::string format = "jsonl";
  std::string output;
  unsigned threads = 1;
};

void require_option(const std::string& value, const char* name) {
  if (value.empty())
    throw CLI::RequiredError(std::string(name));
}

void run_family(const FamilyArgs& args) {
  TrianglePair pair = [&args] {
    if (args.kind == "ra") {
      require_option(args.t, "--t");
      return heronpairs::family_ra(Rational::parse(args.t));
    }
    require_option(args.t1, "--t1");
    Rational t1 = Rational::parse(args.t1);
    if (args.right) {
      return args.kind == "rp" ? heronpairs::family_rp_right(t1)
                               : heronpairs::family_rr_right(t1);
    }
    require_option(args.t2, "--t2");
    Rational t2 = Rational::parse(args.t2);
    return args.kind == "rp" ? heronpairs::family_rp(t1, t2)
                             : heronpairs::family_rr(t1, t2);
  }();
  emit(heronpairs::to_json(pair), args.output);
}

void run_solve(const SolveArgs& args) {
  TrianglePair pair = [&args] {
    if (args.kind == "ra") {
      require_option(args.t, "--t");
      return heronpairs::solve_ra(Rational::parse(args.t),
                                  Rational::parse(args.n),
                                  Rational::parse(args.q));
    }
    require_option(args.t1, "--t1");
    require_option(args.t2, "--t2");
    Rational t1 = Rational::parse(args.t1);
    Rational t2 = Rational::parse(args.t2);
    Rational m = Rational::parse(args.m);
    return args.kind == "rp" ? heronpairs::solve_rp(t1, t2, m)
                             : heronpairs::solve_rr(t1, t2, m);
  }();
  emit(heronpairs::to_json(pair), args.output);
}

void run_descend(const DescendArgs& args) {
  std::ostringstream out;
  std::vector<std::string> pair_docs;
  if (args.kind == "ra") {
    require_option(args.t, "--t");
    Rational t = Rational::parse(args.t);
    std::vector<Rational> values = heronpairs::solve_ra_iterate(t, args.steps);
    out << "{\n  \"kind\": \"ra\",\n  \"u_values\": [";
    for (std::size_t i = 0; i < values.size(); ++i)
      out << (i ? ", " : "") << '"' << values[i] << '"';
    out << "],\n  \"pairs\": [\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      try {
        pair_docs.push_back(heronpairs::to_json(
            heronpairs::pair_from_ra_u(t, values[i], Rational(1), Rational(1))));
      } catch (const heronpairs::Degenerate&) {
      }
    }
  } else {
    require_option(args.t1, "--t1");
    require_option(args.t2, "--t2");
    Rational t1 = Rational::parse(args.t1);
    Rational t2 = Rational::parse(args.t2);
    Rational m = Rational::parse(args.m);
    bool rp = args.kind == "rp";
    heronpairs::PlaneCubic curve = rp ? heronpairs::cubic_rp(t1, t2, m)
                                      : heronpairs::cubic_rr(t1, t2, m);
    CurvePoint base = rp ? heronpairs::cubic_rp_base_point(t1, t2, m)
                         : heronpairs::cubic_rr_base_point(t1, t2, m);
    std::vector<CurvePoint> points =
        heronpairs::descend_further(curve, {base}, args.steps);
    out << "{\n  \"kind\": \"" << args.kind << "\",\n  \"points\": [";
    for (std::size_t i = 0; i < points.size(); ++i)
      out << (i ? ", " : "") << "{\"y1\": \"" << points[i].y1 << "\", \"y2\": \""
          << points[i].y2 << "\"}";
    out << "],\n  \"pairs\": [\n";
    for (const CurvePoint& pt : points) {
      try {
        pair_docs.push_back(
            rp ? heronpairs::to_json(heronpairs::pair_from_rp_point(t1, t2, m, pt))
               : heronpairs::to_json(heronpairs::pair_from_rr_point(t1, t2, m, pt)));
      } catch (const heronpairs::Degenerate&) {
      }
    }
  }
  for (std::size_t i = 0; i < pair_docs.size(); ++i) {
    std::string doc = pair_docs[i];
    if (!doc.empty() && doc.back() == '\n') doc.pop_back();
    out << doc << (i + 1 < pair_docs.size() ? ",\n" : "\n");
  }
  out << "]\n}\n";
  emit(out.str(), args.output);
}

// Returns the exit code: verification failures are mathematical findings.
int run_verify(const VerifyArgs& args) {
  std::vector<TrianglePair> pairs =
      heronpairs::pairs_from_json_lines(read_input(args.input));
  if (pairs.empty()) throw heronpairs::ParseError("no pairs in input", 0);
  std::string out = "[\n";
  bool all_pass = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    heronpairs::VerificationReport report = heronpairs::verify_pair(pairs[i]);
    all_pass = all_pass && report.all_pass();
    std::string doc = heronpairs::to_json(report);
    if (!doc.empty() && doc.back() == '\n') doc.pop_back();
    out += doc;
    out += (i + 1 < pairs.size()) ? ",\n" : "\n";
  }
  out += "]\n";
  emit(out, args.output);
  return all_pass ? 0 : 1;
}

void run_search(const SearchArgs& args) {
  heronpairs::SearchConfig cfg;
  cfg.max_side = args.max_side;
  cfg.primitive_only = args.primitive_only;
  cfg.scalene_only = args.scalene_only;
  if (!args.kinds.empty()) {
    cfg.kinds.clear();
    for (const std::string& k : args.kinds) {
      if (k == "rp") cfg.kinds.insert(PairKind::CommonRP);
      else if (k == "rr") cfg.kinds.insert(PairKind::CommonRr);
      else if (k == "ra") cfg.kinds.insert(PairKind::CommonRA);
      else throw CLI::ValidationError("--kind", "must be rp, rr or ra");
    }
  }
  std::vector<heronpairs::PairRecord> records =
      heronpairs::find_pairs(cfg, args.threads);
  emit(args.format == "csv" ? heronpairs::to_csv(records)
                            : heronpairs::to_json_lines(records),
       args.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Pairs of rational (Heron) triangles with a common circumradius and a "
      "common perimeter, inradius or area; exact rational arithmetic "
      "throughout."};
  app.require_subcommand(1);

  FamilyArgs family;
  CLI::App* family_cmd = app.add_subcommand(
      "family", "Evaluate a closed-form family at rational parameters");
  family_cmd->add_option("kind", family.kind, "Family kind")
      ->required()
      ->check(CLI::IsMember({"rp", "rr", "ra"}));
  family_cmd->add_option("--t1", family.t1, "First parameter (rp, rr)");
  family_cmd->add_option("--t2", family.t2, "Second parameter (rp, rr)");
  family_cmd->add_option("--t", family.t, "Parameter (ra)");
  family_cmd->add_flag("--right", family.right,
                       "Right-triangle specialization (t2 = 1; rp, rr)");
  family_cmd->add_option("-o,--output", family.output, "Output file");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Derive a pair constructively (tangent or Fermat descent)");
  solve_cmd->add_option("kind", solve.kind, "Problem kind")
      ->required()
      ->check(CLI::IsMember({"rp", "rr", "ra"}));
  solve_cmd->add_option("--t1", solve.t1, "First parameter (rp, rr)");
  solve_cmd->add_option("--t2", solve.t2, "Second parameter (rp, rr)");
  solve_cmd->add_option("--m", solve.m, "Scale parameter (rp, rr; default 1)");
  solve_cmd->add_option("--t", solve.t, "Parameter (ra)");
  solve_cmd->add_option("--n", solve.n, "Free scaling n (ra; default 1)");
  solve_cmd->add_option("--q", solve.q, "Free scaling q (ra; default 1)");
  solve_cmd->add_option("-o,--output", solve.output, "Output file");

  DescendArgs descend;
  CLI::App* descend_cmd = app.add_subcommand(
      "descend", "Iterate the tangent/chord or Fermat descent for new solutions");
  descend_cmd->add_option("kind", descend.kind, "Problem kind")
      ->required()
      ->check(CLI::IsMember({"rp", "rr", "ra"}));
  descend_cmd->add_option("--t1", descend.t1, "First parameter (rp, rr)");
  descend_cmd->add_option("--t2", descend.t2, "Second parameter (rp, rr)");
  descend_cmd->add_option("--m", descend.m, "Scale parameter (rp, rr; default 1)");
  descend_cmd->add_option("--t", descend.t, "Parameter (ra)");
  descend_cmd->add_option("--steps", descend.steps, "New points/values to produce")
      ->capture_default_str();
  descend_cmd->add_option("-o,--output", descend.output, "Output file");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Re-check every invariant of serialized pairs");
  verify_cmd->add_option("input", verify.input, "Pair JSON/JSONL file, or -")
      ->required();
  verify_cmd->add_option("-o,--output", verify.output, "Output file");

  SearchArgs search;
  CLI::App* search_cmd = app.add_subcommand(
      "search", "Brute-force all pairs with common invariants up to a bound");
  search_cmd->add_option("--max-side", search.max_side, "Largest side to enumerate")
      ->required()
      ->check(CLI::Range(3, 30000));
  search_cmd->add_option("--kind", search.kinds, "Pair kinds (default: all)")
      ->check(CLI::IsMember({"rp", "rr", "ra"}));
  search_cmd->add_flag("--primitive-only", search.primitive_only,
                       "Only triangles with coprime sides");
  search_cmd->add_flag("--scalene-only", search.scalene_only,
                       "Only scalene triangles");
  search_cmd->add_option("--format", search.format, "Output format")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  search_cmd->add_option("--threads", search.threads, "Enumeration shards")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  search_cmd->add_option("-o,--output", search.output, "Output file");

  int verify_exit = 0;
  family_cmd->callback([&family] { run_family(family); });
  solve_cmd->callback([&solve] { run_solve(solve); });
  descend_cmd->callback([&descend] { run_descend(descend); });
  verify_cmd->callback([&verify, &verify_exit] { verify_exit = run_verify(verify); });
  search_cmd->callback([&search] { run_search(search); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const heronpairs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const heronpairs::Degenerate& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return verify_exit;
}
