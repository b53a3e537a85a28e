// Command-line front end for the realizability library.
//
// Problem files are JSON documents:
//   { "characteristic": 0, "linear_forms": [[1,1,1,1]], "curve": [[2,2,0,0],[0,0,2,2]] }
//
// Exit codes: 0 success (a "-1" answer is an answer), 2 validation failure,
// 3 internal invariant violation.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "tropreal/census.hpp"
#include "tropreal/criteria32.hpp"
#include "tropreal/realize.hpp"

namespace {

using nlohmann::json;
using namespace tropreal;

struct Problem {
  long characteristic = 0;
  PlaneIdeal plane = PlaneIdeal::from_forms({{1, 1, 1, 1}}, 0);
  TropicalCurve curve = TropicalCurve::from_vectors({{1, 0, 0, 0}, {0, 1, 0, 0},
                                                     {0, 0, 1, 0}, {0, 0, 0, 1}}, 4);
};

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TropError(ErrorKind::ParseError, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw TropError(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  Problem p;
  try {
    p.characteristic = doc.at("characteristic").get<long>();
    auto forms = doc.at("linear_forms").get<std::vector<std::vector<long>>>();
    auto vectors = doc.at("curve").get<std::vector<LatticeVector>>();
    p.plane = PlaneIdeal::from_forms(forms, p.characteristic);
    p.curve = TropicalCurve::from_vectors(vectors, p.plane.n_plus_1());
  } catch (const json::exception& e) {
    throw TropError(ErrorKind::ParseError, std::string("bad problem file: ") + e.what());
  }
  Matroid m(p.plane);
  validate_in_fan(p.curve, m);
  return p;
}

std::string criterion_line(const std::string& name, const CriterionResult& r) {
  std::ostringstream os;
  os << name << ": " << to_string(r.verdict);
  if (r.verdict == Verdict::Fires) {
    os << "  [labeling " << r.labeling[0] << r.labeling[1] << r.labeling[2] << r.labeling[3];
    for (const auto& [key, value] : r.numbers) os << " " << key << "=" << value;
    if (r.normal) {
      os << " normal=(" << (*r.normal)[0] << "," << (*r.normal)[1] << "," << (*r.normal)[2]
         << "," << (*r.normal)[3] << ")";
    }
    os << "]";
  }
  return os.str();
}

json criterion_json(const CriterionResult& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::Fires) {
    j["labeling"] = r.labeling;
    j["numbers"] = r.numbers;
    if (r.normal) j["normal"] = *r.normal;
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Relative realizability of tropical curves in tropicalized planes"};
  app.require_subcommand(1);

  std::string file;
  std::string poly_text;
  long long degree = 3;
  long characteristic = 0;
  bool with_irr = false;
  unsigned jobs = 1;
  std::string format = "text";

  auto* dim_cmd = app.add_subcommand("dim", "realization dimension (-1 = not realizable)");
  dim_cmd->add_option("file", file)->required();

  auto* irr_cmd = app.add_subcommand("irr", "irreducible realization dimension");
  irr_cmd->add_option("file", file)->required();

  auto* poly_cmd = app.add_subcommand("poly", "dimension plus a witness polynomial (char 0)");
  poly_cmd->add_option("file", file)->required();

  auto* check_cmd = app.add_subcommand("check", "does the polynomial tropicalize to the curve?");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--poly", poly_text, "polynomial text, e.g. x0^2+2*x0*x1+x1^2")
      ->required();

  auto* obs_cmd = app.add_subcommand("obstructions", "closed-form criteria for L=(x0+x1+x2+x3)");
  obs_cmd->add_option("file", file)->required();
  obs_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* echo_cmd = app.add_subcommand("echo", "parse a problem file and print it canonically");
  echo_cmd->add_option("file", file)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "curve classes of a degree in L^3_2");
  enum_cmd->add_option("--degree", degree)->required()->check(CLI::Range(1, 5));
  enum_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* census_cmd = app.add_subcommand("census", "realizability census over a degree");
  census_cmd->add_option("--degree", degree)->required()->check(CLI::Range(1, 5));
  census_cmd->add_option("--char", characteristic)->required();
  census_cmd->add_flag("--irr", with_irr, "also compute irreducible dimensions");
  census_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  census_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (dim_cmd->parsed()) {
    Problem p = load_problem(file);
    std::cout << realization_dim(p.plane, p.curve) << "\n";
  } else if (irr_cmd->parsed()) {
    Problem p = load_problem(file);
    std::cout << irr_realization_dim(p.plane, p.curve) << "\n";
  } else if (poly_cmd->parsed()) {
    Problem p = load_problem(file);
    HomoPoly f = realization_poly(p.plane, p.curve);
    std::cout << realization_dim(p.plane, p.curve) << "\n" << f.text() << "\n";
  } else if (check_cmd->parsed()) {
    Problem p = load_problem(file);
    Matroid m(p.plane);
    // smallest basis covering the variables that actually appear
    auto terms = parse_polynomial(poly_text);
    std::set<int> used;
    for (const auto& t : terms)
      for (const auto& [var, e] : t.exponents)
        if (e > 0) used.insert(var);
    std::array<int, 3> vars{-1, -1, -1};
    bool found = false;
    for (const auto& b : m.bases()) {
      if (std::all_of(used.begin(), used.end(), [&](int v) {
            return std::find(b.begin(), b.end(), v) != b.end();
          })) {
        vars = {b[0], b[1], b[2]};
        found = true;
        break;
      }
    }
    if (!found)
      throw TropError(ErrorKind::NotABasis, "polynomial variables fit in no basis of M(L)");
    HomoPoly f = homopoly_from_text(poly_text, vars, p.characteristic);
    std::cout << (tropicalizes_to(p.plane, f, p.curve) ? "true" : "false") << "\n";
  } else if (echo_cmd->parsed()) {
    Problem p = load_problem(file);
    json j;
    j["characteristic"] = p.characteristic;
    json forms = json::array();
    for (std::size_t r = 0; r < p.plane.forms().rows(); ++r) {
      json row = json::array();
      for (std::size_t col = 0; col < p.plane.forms().cols(); ++col) {
        const FieldElement& e = p.plane.forms().at(r, col);
        row.push_back(p.characteristic == 0 ? e.rat().get_num().get_si() : e.res());
      }
      forms.push_back(std::move(row));
    }
    j["linear_forms"] = std::move(forms);
    j["curve"] = p.curve.vectors();
    std::cout << j.dump(2) << "\n";
  } else if (obs_cmd->parsed()) {
    Problem p = load_problem(file);
    ObstructionReport r = run_all(p.curve, p.characteristic);
    if (format == "json") {
      json j;
      j["intprod"] = criterion_json(r.intprod);
      j["newton_margin"] = criterion_json(r.newton_margin);
      j["commonray"] = criterion_json(r.commonray);
      j["oppositefaces"] = criterion_json(r.oppositefaces);
      j["oneside"] = criterion_json(r.oneside);
      j["lattice"] = criterion_json(r.lattice);
      j["bogartkatz"] = criterion_json(r.bogartkatz);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << criterion_line("intprod", r.intprod) << "\n"
                << criterion_line("newton_margin", r.newton_margin) << "\n"
                << criterion_line("commonray", r.commonray) << "\n"
                << criterion_line("oppositefaces", r.oppositefaces) << "\n"
                << criterion_line("oneside", r.oneside) << "\n"
                << criterion_line("lattice", r.lattice) << "\n"
                << criterion_line("bogartkatz", r.bogartkatz) << "\n";
    }
  } else if (enum_cmd->parsed()) {
    auto classes = enumerate_curves(degree);
    if (format == "json") {
      json j = json::array();
      for (const auto& c : classes) j.push_back(c.vectors());
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& c : classes) {
        for (std::size_t i = 0; i < c.vectors().size(); ++i) {
          const auto& v = c.vectors()[i];
          std::cout << (i ? " " : "") << "(" << v[0] << "," << v[1] << "," << v[2] << ","
                    << v[3] << ")";
        }
        std::cout << "\n";
      }
      std::cout << "classes: " << classes.size() << "\n";
    }
  } else if (census_cmd->parsed()) {
    CensusOptions opt;
    opt.with_irr = with_irr;
    opt.jobs = jobs;
    CensusReport report = run_census(degree, characteristic, opt);
    if (format == "json") {
      std::cout << census_to_json(report) << "\n";
    } else {
      std::cout << report.total_classes << " classes, " << report.non_realizable
                << " non-realizable (degree " << degree << ", characteristic "
                << characteristic << ")\n";
      std::cout << "not flagged by intprod among non-realizable: "
                << report.intprod_unflagged_nonrealizable << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const TropError& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantViolation ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
