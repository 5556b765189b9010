// fockvar: norms, pairings, projections, A_{p,r} products and verification
// suites for variable-exponent Fock spaces.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 numerical failure.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockvar/fockvar.hpp"

namespace {

using fockvar::cplx;
using fockvar::io::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_numerical = 3;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, end - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || !std::isfinite(v))
      throw fockvar::InputError("bad number '" + item + "' in list '" + text + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

int run_norm(const std::string& exponent, const std::string& function, double tol) {
  const auto p = fockvar::io::exponent_from(fockvar::io::read_file(exponent));
  const auto f = fockvar::io::function_from(fockvar::io::read_file(function));
  const auto r = fockvar::luxemburg_norm(f, p, tol);
  emit({{"norm", r.value},
        {"modular_at_norm", r.modular_at_value.value_or(0.0)},
        {"iterations", r.iterations},
        {"quad_error", r.quadrature_error}});
  return exit_ok;
}

int run_pair(const std::string& exponent, const std::string& f_path, const std::string& g_path, double tol) {
  const auto f = fockvar::io::function_from(fockvar::io::read_file(f_path));
  const auto g = fockvar::io::function_from(fockvar::io::read_file(g_path));
  const auto pr = fockvar::pairing(f, g, tol);
  json out{{"re", pr.value.real()}, {"im", pr.value.imag()}, {"quad_error", pr.error}};
  if (!exponent.empty()) {
    const auto p = fockvar::io::exponent_from(fockvar::io::read_file(exponent));
    const auto rep = fockvar::holder_margin(f, g, p, tol);
    const auto& c = rep.cases.front();
    out["holder_lhs"] = c.lhs;
    out["holder_bound"] = *c.rhs;
    out["holder_margin"] = *c.margin();
  }
  emit(out);
  return exit_ok;
}

int run_project(const std::string& exponent, const std::string& g_path, const std::string& points, double tol) {
  const auto g = fockvar::io::integrand_from(fockvar::io::read_file(g_path));
  const auto pts = fockvar::io::points_from(fockvar::io::read_file(points));
  const auto s = fockvar::project_samples(g, pts, tol);
  json values = json::array(), errors = json::array(), zs = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    zs.push_back(fockvar::io::to_json(pts[k]));
    values.push_back(fockvar::io::to_json(s.values[k]));
    errors.push_back(s.errors[k]);
  }
  json out{{"points", zs}, {"values", values}, {"errors", errors}};
  if (!exponent.empty()) {
    const auto p = fockvar::io::exponent_from(fockvar::io::read_file(exponent));
    out["norm_g"] = fockvar::luxemburg_norm(g, p, tol).value;
  }
  emit(out);
  return exit_ok;
}

int run_apr(const std::string& weight, double p0, double r, const std::string& centers, double tol) {
  const auto w = fockvar::io::weight_from(fockvar::io::read_file(weight));
  std::string out = "center,product\n";
  for (const double c : parse_reals(centers))
    out += fockvar::to_text(c) + "," + fockvar::to_text(fockvar::apr_product(w, p0, r, c, tol).value) + "\n";
  std::cout << out;
  return exit_ok;
}

int run_verify(const std::string& suite, const fockvar::suites::SuiteConfig& cfg, const std::string& format) {
  const auto reports = fockvar::suites::run(suite, cfg);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (format == "csv") {
    std::cout << fockvar::io::to_csv(reports);
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(fockvar::io::to_json(r));
    emit(arr);
  }
  return ok ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variable-exponent Fock space numerics"};
  app.require_subcommand(1);
  double tol = 1e-9;
  app.add_option("--tol", tol, "absolute tolerance")->check(CLI::PositiveNumber);

  std::string exponent, function, f_path, g_path, points, weight, centers = "0,2,4,6";
  std::string suite = "all", format = "json";
  double p0 = 2.0, radius = 1.0;
  fockvar::suites::SuiteConfig cfg;

  auto* norm = app.add_subcommand("norm", "Luxemburg norm of a function");
  norm->add_option("--exponent", exponent, "exponent JSON file")->required();
  norm->add_option("--function", function, "function JSON file")->required();
  norm->add_option("--tol", tol, "absolute tolerance")->check(CLI::PositiveNumber);

  auto* pair = app.add_subcommand("pair", "weighted pairing <f, g>");
  pair->add_option("--exponent", exponent, "exponent JSON file; adds the Holder bound");
  pair->add_option("--f", f_path, "function JSON file")->required();
  pair->add_option("--g", g_path, "function JSON file")->required();
  pair->add_option("--tol", tol, "absolute tolerance")->check(CLI::PositiveNumber);

  auto* project = app.add_subcommand("project", "projection Pg sampled at points");
  project->add_option("--exponent", exponent, "exponent JSON file; adds the norm of g");
  project->add_option("--g", g_path, "integrand JSON file")->required();
  project->add_option("--points", points, "points JSON file")->required();
  project->add_option("--tol", tol, "absolute tolerance")->check(CLI::PositiveNumber);

  auto* apr = app.add_subcommand("apr", "A_{p,r} product on balls centered on the real axis");
  apr->add_option("--weight", weight, "weight JSON file")->required();
  apr->add_option("--p0", p0, "exponent p0 > 1");
  apr->add_option("--r", radius, "ball radius");
  apr->add_option("--centers", centers, "comma-separated real centers");
  apr->add_option("--tol", tol, "absolute tolerance")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string names = "all";
  for (const auto& [n, fn] : fockvar::suites::registry()) names += "|" + n;
  verify->add_option("--suite", suite, names);
  verify->add_option("--seed", cfg.seed, "seed for randomized suites");
  verify->add_option("--budget", cfg.budget, "max randomized functions per suite")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--tol", tol, "absolute tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*norm) return run_norm(exponent, function, tol);
    if (*pair) return run_pair(exponent, f_path, g_path, tol);
    if (*project) return run_project(exponent, g_path, points, tol);
    if (*apr) return run_apr(weight, p0, radius, centers, tol);
    cfg.tol = tol;
    return run_verify(suite, cfg, format);
  } catch (const fockvar::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_input;
  } catch (const fockvar::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  }
}
