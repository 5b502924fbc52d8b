// Command-line front end: verify, invariants, singular, catalog.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cubsym/catalog.hpp"
#include "cubsym/errors.hpp"
#include "cubsym/forms.hpp"
#include "cubsym/invariants.hpp"
#include "cubsym/jacobian.hpp"
#include "cubsym/verifier.hpp"

namespace {

using namespace cubsym;

struct Mutation {
  std::string name;
  std::size_t row = 0;
  std::size_t col = 0;
};

// "NAME" or "NAME:r,c" with zero-based indices.
Mutation parse_mutation(const std::string& text) {
  Mutation m;
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) {
    m.name = text;
    return m;
  }
  m.name = text.substr(0, colon);
  const std::string rc = text.substr(colon + 1);
  const auto comma = rc.find(',');
  if (comma == std::string::npos) throw DomainError("--mutate: expected NAME:row,col");
  try {
    m.row = std::stoul(rc.substr(0, comma));
    m.col = std::stoul(rc.substr(comma + 1));
  } catch (const std::exception&) {
    throw DomainError("--mutate: bad entry index '" + rc + "'");
  }
  return m;
}

void print_report(std::ostream& os, const CheckReport& r, bool verbose) {
  os << r.check_id << ' ' << r.name << ": " << to_string(r.status) << " (" << r.elapsed_ms << " ms)";
  if (r.status != Status::pass && !r.details.empty()) os << "  " << r.details;
  os << '\n';
  for (const auto& a : r.assertions) {
    if (a.held && !verbose) continue;
    os << "  [" << (a.held ? "ok" : "FAILED") << "] " << a.label << ": " << a.claim << '\n';
    if (!a.held) os << "      expected: " << a.expected << "\n      computed: " << a.computed << '\n';
  }
}

int run_verify(const std::string& target, bool json, const std::string& out, const std::vector<std::string>& mutations,
               std::size_t max_closure, bool printed, bool verbose, bool fail_fast) {
  Catalog catalog(printed);
  for (const auto& text : mutations) {
    const Mutation m = parse_mutation(text);
    catalog.mutate(m.name, m.row, m.col);
  }
  VerifyOptions opt;
  opt.max_closure = max_closure;
  opt.fail_fast = fail_fast;
  const Verifier verifier(std::move(catalog), opt);

  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckReport> reports;
  if (target == "all") {
    reports = verifier.run_all();
  } else {
    reports.push_back(verifier.run(target));
  }
  const auto total =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (json) {
    const std::string text = to_json(reports).dump(2);
    if (out.empty()) {
      std::cout << text << '\n';
    } else {
      std::ofstream f(out);
      if (!f) throw Error("cannot write '" + out + "'");
      f << text << '\n';
    }
  } else {
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out.empty()) {
      f.open(out);
      if (!f) throw Error("cannot write '" + out + "'");
      os = &f;
    }
    for (const auto& r : reports) print_report(*os, r, verbose);
    *os << "total: " << total << " ms\n";
  }

  bool any_error = false;
  bool all_pass = true;
  for (const auto& r : reports) {
    any_error = any_error || r.status == Status::error;
    all_pass = all_pass && r.status == Status::pass;
  }
  if (any_error) return 2;
  return all_pass ? 0 : 1;
}

int run_invariants(const std::string& group, int degree, const std::string& character) {
  const Catalog catalog;
  const auto gens = catalog.generators(group);
  std::vector<InvariantSpace> spaces;
  if (character == "trivial") {
    InvariantSpace s = strict_invariants(gens, degree);
    if (s.dimension() > 0) spaces.push_back(std::move(s));
  } else {
    spaces = relative_invariants(gens, degree);
  }
  std::cout << spaces.size() << " space(s)\n";
  for (const auto& s : spaces) {
    std::cout << "character " << to_string(s.character) << ", dimension " << s.dimension() << '\n';
    for (const auto& f : s.basis) std::cout << "  " << to_string(f) << '\n';
  }
  return 0;
}

int run_singular(const std::string& text) {
  const Form f = parse_form(text);
  const SingularityReport rep = singularity_report(f);
  if (rep.nonsingular) {
    std::cout << "nonsingular\n";
    return 0;
  }
  std::cout << "singular";
  if (rep.witness) std::cout << " at " << to_string(*rep.witness);
  std::cout << '\n';
  return 0;
}

int run_catalog(const std::string& name, bool printed) {
  const Catalog catalog(printed);
  if (name.empty()) {
    std::cout << "groups:";
    for (const auto& g : catalog.group_names()) std::cout << ' ' << g;
    std::cout << "\nmatrices:";
    for (const auto& m : catalog.matrix_names()) std::cout << ' ' << m;
    std::cout << '\n';
  } else if (catalog.has_group(name)) {
    for (const auto& g : catalog.generator_names(name)) {
      std::cout << g << " =\n" << to_string(catalog.matrix(g)) << '\n';
    }
  } else {
    std::cout << to_string(catalog.matrix(name)) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetry computations for cubic surfaces"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run named checks");
  std::string target;
  bool json = false;
  bool printed = false;
  bool verbose = false;
  bool fail_fast = false;
  std::string out;
  std::vector<std::string> mutations;
  std::size_t max_closure = 100000;
  verify->add_option("check", target, "'all', a check id (C1..C10) or a check name")->required();
  verify->add_flag("--json", json, "Write a JSON report");
  verify->add_option("--out", out, "Write the report to a file");
  verify->add_option("--mutate", mutations, "Add 1 to a catalog entry, NAME or NAME:row,col (zero-based)");
  verify->add_option("--max-closure", max_closure, "Closure size cap");
  verify->add_flag("--printed", printed, "Use entries exactly as printed where they differ");
  verify->add_flag("-v,--verbose", verbose, "List every assertion");
  verify->add_flag("--fail-fast", fail_fast, "Stop each check at its first failed assertion");

  auto* inv = app.add_subcommand("invariants", "Relative-invariant forms of a catalog group");
  std::string group;
  int degree = 3;
  std::string character = "all";
  inv->add_option("--group", group, "Catalog group")->required();
  inv->add_option("--degree", degree, "Form degree")->check(CLI::Range(1, 12));
  inv->add_option("--character", character, "all or trivial")->check(CLI::IsMember({"all", "trivial"}));

  auto* sing = app.add_subcommand("singular", "Decide nonsingularity of V(f)");
  std::string form_text;
  sing->add_option("--form", form_text, "Homogeneous form in x, y, z, t")->required();

  auto* cat = app.add_subcommand("catalog", "Print catalog matrices and groups");
  std::string entry;
  bool cat_printed = false;
  cat->add_option("name", entry, "Matrix or group name; omit to list");
  cat->add_flag("--printed", cat_printed, "Resolve names to printed variants");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(target, json, out, mutations, max_closure, printed, verbose, fail_fast);
    if (*inv) return run_invariants(group, degree, character);
    if (*sing) return run_singular(form_text);
    if (*cat) return run_catalog(entry, cat_printed);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
