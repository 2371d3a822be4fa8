// weylspin: exact verification toolkit for Lorentzian Weyl structures of
// Walker type and their spinor-carrying holonomy algebras.
//
// Exit codes: 0 all selected checks pass (flagged records do not fail),
//             1 at least one check failed,
//             2 input error (bad flags, missing file, parse error, pole).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylspin/exact_scalar.hpp"
#include "weylspin/report.hpp"
#include "weylspin/symdiff.hpp"

namespace {

std::vector<weylspin::Rational> parse_basepoint(const std::vector<std::string>& parts) {
  std::vector<weylspin::Rational> out;
  for (const std::string& p : parts) {
    weylspin::Rational r;
    if (mpq_set_str(r.get_mpq_t(), p.c_str(), 10) != 0)
      throw std::invalid_argument("bad basepoint coordinate: " + p);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

int emit(const weylspin::report::Report& rep, const std::string& out_path,
         bool json_stdout) {
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << rep.to_json().dump(2) << "\n";
  }
  if (json_stdout)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.render_text();
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weylspin: exact checks for Walker-type Lorentzian Weyl structures, "
      "their holonomy spans, and weighted parallel spinors"};
  app.require_subcommand(1);

  std::string out_path;
  bool json_stdout = false;

  // catalog
  std::string filter;
  unsigned max_n = 6;
  CLI::App* cat = app.add_subcommand(
      "catalog", "tabulate the holonomy variants with exact spinor counts");
  cat->add_option("filter", filter,
                  "only variants whose family or name matches (substring)");
  cat->add_option("--max-n", max_n, "largest horizontal dimension")
      ->capture_default_str();
  cat->add_option("--out", out_path, "write the JSON report to a file");
  cat->add_flag("--json", json_stdout, "print the JSON report to stdout");

  // check
  weylspin::report::CheckConfig check_cfg;
  std::vector<std::string> basepoint_parts;
  CLI::App* chk = app.add_subcommand(
      "check", "run the verification suites on a structure file");
  chk->add_option("--structure", check_cfg.structure_path, "structure JSON file")
      ->required();
  chk->add_option("--suite", check_cfg.suites,
                  "comma-separated record names to run (default: all)")
      ->delimiter(',');
  chk->add_option("--basepoint", basepoint_parts,
                  "override the basepoint (comma-separated rationals v,x1..xn,u)")
      ->delimiter(',');
  chk->add_option("--max-order", check_cfg.max_order,
                  "holonomy covariant-derivative cap")
      ->capture_default_str();
  chk->add_option("--out", out_path, "write the JSON report to a file");
  chk->add_flag("--json", json_stdout, "print the JSON report to stdout");

  // selftest
  weylspin::report::SelftestConfig self_cfg;
  std::uint64_t seed = 1;
  CLI::App* self = app.add_subcommand(
      "selftest", "run the cross-module invariant suites");
  self->add_option("--max-signature", self_cfg.max_signature,
                   "cap on the total signature dimension")
      ->capture_default_str();
  self->add_option("--seed", seed, "seed for the randomized property suites")
      ->capture_default_str();
  self->add_option("--pairs", self_cfg.bivector_pairs,
                   "bivector pairs per signature")
      ->capture_default_str();
  self->add_option("--instances", self_cfg.random_instances,
                   "random structures for the closed-form suite")
      ->capture_default_str();
  self->add_option("--out", out_path, "write the JSON report to a file");
  self->add_flag("--json", json_stdout, "print the JSON report to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cat->parsed()) return emit(weylspin::report::cmd_catalog(filter, max_n),
                                   out_path, json_stdout);
    if (chk->parsed()) {
      check_cfg.basepoint_override = parse_basepoint(basepoint_parts);
      return emit(weylspin::report::cmd_check(check_cfg), out_path, json_stdout);
    }
    self_cfg.seed = seed;
    return emit(weylspin::report::cmd_selftest(self_cfg), out_path, json_stdout);
  } catch (const weylspin::symdiff::ParseError& e) {
    std::cerr << "input error: " << e.what() << " (position " << e.position() << ")\n";
    return 2;
  } catch (const weylspin::symdiff::PoleError& e) {
    std::cerr << "input error: pole at the basepoint: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
