// Command-line front end: verification sweeps, Lefschetz decomposition,
// transformation inversion, vanishing-table queries, table emission, and the
// constructive splitting demo.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "contactalg/contact.hpp"
#include "contactalg/darboux.hpp"
#include "contactalg/vanishing.hpp"
#include "contactalg/verify.hpp"

using namespace contactalg;
using nlohmann::json;

namespace {

int run_verify(int n_max, const std::vector<std::string>& suites,
               std::uint64_t seed, bool structured) {
  using SuiteFn = std::function<SuiteReport()>;
  const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"commutator", [&] { return run_commutator_suite(n_max); }},
      {"s2eq3", [&] { return run_s2eq3_suite(n_max, seed); }},
      {"decompose", [&] { return run_decompose_suite(n_max); }},
      {"prop22", [&] { return run_prop22_suite(n_max, seed); }},
      {"closedform", [&] { return run_closedform_suite(); }},
      {"darboux", [&] { return run_darboux_suite(seed); }},
      {"duality", [&] { return run_duality_suite(); }},
  };

  std::vector<std::string> selected = suites;
  if (selected.empty())
    for (const auto& [name, fn] : all) selected.push_back(name);

  bool all_passed = true;
  for (const std::string& name : selected) {
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const auto& entry) { return entry.first == name; });
    if (it == all.end())
      throw structural_error("unknown suite '" + name + "'");
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport report = it->second();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    all_passed = all_passed && report.passed();
    if (structured) {
      for (const SuiteRecord& rec : report.violations) {
        json record{{"suite", rec.suite}, {"n", rec.n},
                    {"k", rec.k},         {"m", rec.has_m ? json(rec.m) : json()},
                    {"i", rec.has_i ? json(rec.i) : json()},
                    {"status", "violation"},
                    {"detail", rec.detail}};
        std::cout << record.dump() << '\n';
      }
      json summary{{"suite", name},
                   {"status", report.passed() ? "ok" : "fail"},
                   {"checks", report.checks},
                   {"violations", report.violations.size()},
                   {"seconds", elapsed}};
      std::cout << summary.dump() << '\n';
    } else {
      std::cout << "suite " << name << ": checks=" << report.checks
                << " violations=" << report.violations.size() << " ["
                << (report.passed() ? "ok" : "FAIL") << "] (" << elapsed
                << "s)\n";
      for (const SuiteRecord& rec : report.violations)
        std::cout << "  violation: n=" << rec.n << " k=" << rec.k << " "
                  << rec.detail << '\n';
    }
  }
  if (!structured)
    std::cout << (all_passed ? "verify: PASS" : "verify: FAIL") << '\n';
  return all_passed ? 0 : 1;
}

int run_decompose(int n, const std::string& text) {
  const SymplecticModel model(n);
  const Multivector X = parse_multivector(text, 2 * n);
  const LefschetzComponents parts = lefschetz_decompose(model, X);
  for (const auto& [r, part] : parts.parts)
    std::cout << "r=" << r << ": " << to_string(part) << '\n';
  const bool exact = reassemble(model, parts) == X;
  std::cout << "reconstruction: " << (exact ? "exact" : "FAILED") << '\n';
  return exact ? 0 : 1;
}

int run_tinvert(const std::string& family_name, int n, long m,
                const std::string& text, bool forward) {
  const SymplecticModel model(n);
  const Multivector Y = parse_multivector(text, 2 * n);
  const std::map<std::string, FamilyKind> kinds = {
      {"default", FamilyKind::kDefault},
      {"twisted", FamilyKind::kTwisted},
      {"twisted-prime", FamilyKind::kTwistedPrime},
      {"half-twisted", FamilyKind::kHalfTwisted},
      {"half-twisted-prime", FamilyKind::kHalfTwistedPrime},
  };
  auto it = kinds.find(family_name);
  if (it == kinds.end())
    throw structural_error("unknown family '" + family_name + "'");
  const CoefficientFamily family{it->second, n, Y.degree(), m};
  if (!is_well_defined(family))
    throw structural_error("family is not well-defined at this (k, m)");
  if (forward) {
    std::cout << to_string(apply_transform(family, model, Y)) << '\n';
    return 0;
  }
  if (!is_invertible(family))
    throw structural_error("transformation is not invertible for this family");
  const Multivector X = invert_transform(family, model, Y);
  std::cout << to_string(X) << '\n';
  return apply_transform(family, model, X) == Y ? 0 : 1;
}

int run_vanish(const std::string& table, int n, int k, long m, int i,
               bool structured) {
  const Verdict verdict = query_table(parse_table_id(table), n, k, m, i);
  if (structured) {
    json record{{"n", n},       {"k", k},
                {"m", m},       {"i", i},
                {"verdict", verdict.matched ? "Vanishes" : "NotCovered"},
                {"rules", verdict.rules}};
    std::cout << record.dump() << '\n';
  } else if (verdict.matched) {
    std::cout << "Vanishes [";
    for (std::size_t r = 0; r < verdict.rules.size(); ++r)
      std::cout << (r ? ", " : "") << verdict.rules[r];
    std::cout << "]\n";
  } else {
    std::cout << "NotCovered\n";
  }
  return 0;
}

int run_split_demo(int n, int k, const std::string& text) {
  if (n < 1 || n > 2) throw structural_error("split-demo supports n in {1, 2}");
  if (k < 1 || k > 3) throw structural_error("split-demo supports k in 1..3");
  const DarbouxModel model(n);
  const PolyMultivector s = parse_darboux(model, text, 2 * n, false, k - 1);
  if (s.degree() != k - 1)
    throw structural_error("section degree must be k-1");
  const PolyMultivector X = splitting_section(model, k, s);
  std::cout << "X = " << to_string_darboux(model, X) << '\n';
  const SplittingResiduals res = splitting_residuals(model, k, s, X);
  std::cout << "contraction residual: " << to_string_darboux(model, res.lift)
            << '\n';
  std::cout << "equation residual: " << to_string_darboux(model, res.equation)
            << '\n';
  return res.lift.is_zero() && res.equation.is_zero() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exterior-algebra toolkit for complex contact structures"};
  app.require_subcommand(1);
  int exit_code = 0;

  // verify
  auto* verify = app.add_subcommand("verify", "run verification sweeps");
  int n_max = 3;
  std::vector<std::string> suites;
  std::uint64_t seed = kDefaultSeed;
  bool verify_json = false;
  verify->add_option("--n-max", n_max, "largest half-dimension to sweep")
      ->check(CLI::Range(1, 4));
  verify->add_option("--suite", suites,
                     "suites to run: commutator, s2eq3, decompose, prop22, "
                     "closedform, darboux, duality (default: all)");
  verify->add_option("--seed", seed, "seed for the randomized suites");
  verify->add_flag("--json", verify_json, "line-delimited JSON records");
  verify->callback(
      [&] { exit_code = run_verify(n_max, suites, seed, verify_json); });

  // decompose
  auto* decompose =
      app.add_subcommand("decompose", "primitive decomposition of a k-vector");
  int dec_n = 2;
  std::string dec_text;
  decompose->add_option("-n", dec_n, "half-dimension")->required();
  decompose->add_option("multivector", dec_text, "element, e.g. '1*e{1,2}'")
      ->required();
  decompose->callback([&] { exit_code = run_decompose(dec_n, dec_text); });

  // tinvert
  auto* tinvert = app.add_subcommand(
      "tinvert", "invert the coefficient-family transformation");
  std::string family = "default";
  int tin_n = 2;
  long tin_m = 0;
  bool tin_forward = false;
  std::string tin_text;
  tinvert->add_option("--family", family,
                      "default, twisted, twisted-prime, half-twisted, "
                      "half-twisted-prime");
  tinvert->add_option("-n", tin_n, "half-dimension")->required();
  tinvert->add_option("-m", tin_m, "twist (ignored for default)");
  tinvert->add_flag("--forward", tin_forward, "apply instead of invert");
  tinvert->add_option("multivector", tin_text, "element to transform")
      ->required();
  tinvert->callback([&] {
    exit_code = run_tinvert(family, tin_n, tin_m, tin_text, tin_forward);
  });

  // vanish
  auto* vanish = app.add_subcommand("vanish", "query a vanishing table");
  std::string table;
  int va_n = 1, va_k = 1, va_i = 0;
  long va_m = 0;
  bool va_json = false;
  vanish->add_option("--table", table, "kahler+, kahler- or cp")->required();
  vanish->add_option("-n", va_n)->required();
  vanish->add_option("-k", va_k)->required();
  vanish->add_option("-m", va_m)->required();
  vanish->add_option("-i", va_i)->required();
  vanish->add_flag("--json", va_json, "machine-readable record");
  vanish->callback(
      [&] { exit_code = run_vanish(table, va_n, va_k, va_m, va_i, va_json); });

  // table
  auto* table_cmd = app.add_subcommand("table", "emit a verdict grid");
  std::string table_name;
  int tb_n = 1, tb_kmin = 1, tb_kmax = 0, tb_imin = 0, tb_imax = -1;
  long tb_mmin = -10, tb_mmax = 5;
  bool tb_json = false;
  table_cmd->add_option("--table", table_name, "kahler+, kahler- or cp")
      ->required();
  table_cmd->add_option("-n", tb_n)->required();
  table_cmd->add_option("--k-min", tb_kmin);
  table_cmd->add_option("--k-max", tb_kmax, "default 2n+1");
  table_cmd->add_option("--m-min", tb_mmin);
  table_cmd->add_option("--m-max", tb_mmax);
  table_cmd->add_option("--i-min", tb_imin);
  table_cmd->add_option("--i-max", tb_imax, "default 2n+1");
  table_cmd->add_flag("--json", tb_json, "line-delimited JSON records");
  table_cmd->callback([&] {
    const int kmax = tb_kmax > 0 ? tb_kmax : 2 * tb_n + 1;
    const int imax = tb_imax >= 0 ? tb_imax : 2 * tb_n + 1;
    emit_table(std::cout, parse_table_id(table_name), tb_n, tb_kmin, kmax,
               tb_mmin, tb_mmax, tb_imin, imax, tb_json);
  });

  // split-demo
  auto* split = app.add_subcommand(
      "split-demo", "constructive splitting of a distribution section");
  int sp_n = 1, sp_k = 1;
  std::string sp_text;
  split->add_option("-n", sp_n, "half-dimension (1 or 2)")->required();
  split->add_option("-k", sp_k, "degree of the produced k-vector (1..3)")
      ->required();
  split->add_option("-s", sp_text, "section over the frame, e.g. 'z1' or 'X1'")
      ->required();
  split->callback([&] { exit_code = run_split_demo(sp_n, sp_k, sp_text); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const structural_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}
