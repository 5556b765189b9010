#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fockvar/error.hpp"
#include "fockvar/exponents.hpp"
#include "fockvar/functions.hpp"
#include "fockvar/modular.hpp"
#include "fockvar/operators.hpp"
#include "fockvar/parallel.hpp"
#include "fockvar/report.hpp"

namespace fockvar::suites {

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t budget = 200;  // cap on randomized functions per suite
  double tol = 1e-9;         // quadrature and solver tolerance
};

// Seeded generator for the randomized suites: polynomials of degree <= 6 with
// coefficients in the unit disk and 0-2 kernel terms with centers |a| <= 1.5.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

  cplx in_disk(double radius) {
    for (;;) {
      const cplx z(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      if (std::norm(z) <= 1.0) return radius * z;
    }
  }

  EntireFunction function() {
    for (;;) {
      std::vector<cplx> poly(static_cast<std::size_t>(integer(0, 6)) + 1);
      for (auto& c : poly) c = in_disk(1.0);
      std::vector<KernelTerm> kernels(static_cast<std::size_t>(integer(0, 2)));
      for (auto& k : kernels) k = {in_disk(1.0), in_disk(1.5)};
      EntireFunction f(std::move(poly), std::move(kernels));
      if (!f.is_zero()) return f;
    }
  }

  // Band kept inside [1.3, 4.5], where the Holder constant 2 holds for the
  // normalized modular.
  VariableExponent exponent() {
    const double base = uniform(1.5, 3.5);
    const double amp = uniform(0.0, std::min(1.0, 4.5 - base));
    switch (integer(0, 3)) {
      case 0: return VariableExponent::constant(uniform(1.3, 4.5));
      case 1: return VariableExponent::log_decay(base, uniform(-std::min(0.2, base - 1.3), amp));
      case 2: return VariableExponent::radial_bump(base, amp, uniform(0.5, 2.0));
      default: {
        const double a = std::min(amp, base - 1.3);
        return VariableExponent::expression(to_text(base) + " + " + to_text(a) + "*sin(re(z))*exp(-abs(z)/4)",
                                            base - a, base + a, base);
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

// Twenty fixed functions: monomials, polynomials with zeros, single kernels
// and mixed combinations.
inline std::vector<EntireFunction> corpus() {
  const cplx i(0.0, 1.0);
  return {
      EntireFunction::constant(1.0),
      monomial(1),
      monomial(2),
      monomial(3),
      monomial(4),
      EntireFunction({1.0, 1.0}, {}),
      EntireFunction({1.0, -2.0, 1.0}, {}),
      EntireFunction({0.5 * i, 0.0, 0.0, 1.0}, {}),
      EntireFunction({-0.3, 0.0, 1.0 + i}, {}),
      scale(0.25, monomial(5)),
      kernel(1.0),
      kernel(i),
      kernel(0.5 + 0.5 * i),
      kernel(-1.0),
      kernel(0.3),
      EntireFunction({1.0}, {{1.0, 1.0}}),
      EntireFunction({0.0, 1.0}, {{1.0, -0.5 * i}}),
      kernel(1.0) - kernel(-1.0),
      EntireFunction({0.0, 0.0, 0.0, 0.2}, {{1.0, 0.7}}),
      EntireFunction({0.0, 0.0, 1.0}, {{0.5 - 0.5 * i, 0.25 - 0.75 * i}}),
  };
}

// Bound cases get the suite's pass threshold as their tolerance.
inline VerificationReport with_threshold(VerificationReport r, double threshold) {
  for (auto& c : r.cases)
    if (c.rhs) c.tolerance = threshold;
  return r;
}

// Merge per-case reports of one property into a single report, in order.
inline VerificationReport merged(std::string property, std::string anchor, const std::vector<VerificationReport>& parts) {
  VerificationReport out{std::move(property), std::move(anchor), {}, std::nullopt, {}};
  for (const auto& p : parts) {
    out.cases.insert(out.cases.end(), p.cases.begin(), p.cases.end());
    out.notes.insert(out.notes.end(), p.notes.begin(), p.notes.end());
    if (p.measured) out.measured = std::max(out.measured.value_or(-std::numeric_limits<double>::infinity()), *p.measured);
  }
  return out;
}

// Lazily built FockModular per exponent, shared by the cases of a suite.
class SpaceCache {
 public:
  explicit SpaceCache(double tol) : tol_(tol) {}
  const FockModular& get(const VariableExponent& p) {
    const std::string key = p.describe();
    auto it = spaces_.find(key);
    if (it == spaces_.end()) it = spaces_.emplace(key, std::make_unique<FockModular>(p, tol_)).first;
    return *it->second;
  }

 private:
  double tol_;
  std::map<std::string, std::unique_ptr<FockModular>> spaces_;
};

inline std::size_t capped(std::size_t wanted, const SuiteConfig& cfg) { return std::min(wanted, cfg.budget); }

// Pool of random exponents drawn up front so spaces can be cached.
inline std::vector<VariableExponent> exponent_pool(RandomSource& rnd, std::size_t n) {
  std::vector<VariableExponent> pool;
  for (std::size_t k = 0; k < n; ++k) pool.push_back(rnd.exponent());
  return pool;
}

template <class Fn>
std::vector<VerificationReport> run_cases(std::size_t n, Fn&& fn) {
  std::vector<VerificationReport> parts(n);
  parallel_for(n, [&](std::size_t i) { parts[i] = fn(i); });
  return parts;
}

// Holder inequality: closed case f = g = 1, p = 2, then 200 random triples.
inline std::vector<VerificationReport> holder(const SuiteConfig& cfg) {
  SpaceCache spaces(cfg.tol);
  const auto two = VariableExponent::constant(2.0);
  auto closed = holder_margin(EntireFunction::constant(1.0), EntireFunction::constant(1.0), spaces.get(two),
                              spaces.get(two), cfg.tol);
  closed.property = "holder_closed_case";
  closed.cases.push_back(bound_case("lhs=pi/2", std::abs(closed.cases[0].lhs - std::numbers::pi / 2.0), 0.0, 1e-9));
  closed.cases.push_back(bound_case("rhs=2", std::abs(*closed.cases[0].rhs - 2.0), 0.0, 1e-9));

  RandomSource rnd(cfg.seed);
  const auto pool = exponent_pool(rnd, 8);
  struct Triple {
    EntireFunction f, g;
    std::size_t p;
  };
  std::vector<Triple> triples;
  for (std::size_t k = 0; k < capped(200, cfg); ++k) {
    auto f = rnd.function();
    auto g = rnd.function();
    triples.push_back({std::move(f), std::move(g), static_cast<std::size_t>(rnd.integer(0, 7))});
  }
  for (const auto& p : pool) {
    spaces.get(p);
    spaces.get(conjugate(p));
  }
  const auto parts = run_cases(triples.size(), [&](std::size_t i) {
    const auto& t = triples[i];
    const auto& p = pool[t.p];
    auto r = holder_margin(t.f, t.g, spaces.get(p), spaces.get(conjugate(p)), cfg.tol);
    r.cases[0].inputs = t.f.describe() + "|" + t.g.describe() + "|" + p.describe();
    return r;
  });
  return {with_threshold(closed, 1e-9),
          with_threshold(merged("holder_inequality", "Holder inequality with constant 2", parts), 1e-7)};
}

// Norm equivalence through the extremal witness: ||f|| <= triple <= (4/pi)||f||.
inline std::vector<VerificationReport> equiv(const SuiteConfig& cfg) {
  SpaceCache spaces(cfg.tol);
  RandomSource rnd(cfg.seed + 1);
  const auto pool = exponent_pool(rnd, 6);
  std::vector<std::pair<EntireFunction, std::size_t>> cases;
  for (std::size_t k = 0; k < capped(100, cfg); ++k) {
    auto f = rnd.function();
    cases.emplace_back(std::move(f), static_cast<std::size_t>(rnd.integer(0, 5)));
  }
  for (const auto& p : pool) {
    spaces.get(p);
    spaces.get(conjugate(p));
  }
  const auto parts = run_cases(cases.size(), [&](std::size_t i) {
    const auto& [f, k] = cases[i];
    const auto& p = pool[k];
    const auto t = triple_norm(f, spaces.get(p), spaces.get(conjugate(p)), cfg.tol);
    const std::string tag = f.describe() + "|" + p.describe();
    VerificationReport r{"norm_equivalence", "equivalence of the Luxemburg and dual-pairing norms", {}, std::nullopt, {}};
    auto lower = bound_case(tag + "|lower", *t.luxemburg, t.value, 1e-6);
    lower.extras = {{"ratio", t.value / *t.luxemburg}};
    r.cases.push_back(std::move(lower));
    r.cases.push_back(bound_case(tag + "|upper", t.value, *t.upper_bound, 1e-6));
    return r;
  });
  auto rep = merged("norm_equivalence", "equivalence of the Luxemburg and dual-pairing norms", parts);
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& c : rep.cases)
    if (!c.extras.empty()) lo = std::min(lo, c.extras[0].second);
  rep.measured = lo;
  rep.notes.push_back("measured = smallest triple/Luxemburg ratio");
  return {with_threshold(rep, 1e-6)};
}

inline std::vector<cplx> mean_value_points() {
  std::vector<cplx> pts{0.0};
  for (int k = 0; k < 6; ++k) {
    pts.push_back(std::polar(1.0, k * std::numbers::pi / 3.0 + 0.2));
    pts.push_back(std::polar(2.0, k * std::numbers::pi / 3.0 + 0.5));
  }
  return pts;
}

// Mean-value lemma over corpus x points x R, and the evaluation bound.
inline std::vector<VerificationReport> eval(const SuiteConfig& cfg) {
  const auto fs = corpus();
  const auto pts = mean_value_points();
  const std::array<double, 3> radii{0.5, 1.0, 2.0};
  const std::size_t per_f = pts.size() * radii.size();
  const auto mv = run_cases(fs.size() * per_f, [&](std::size_t i) {
    const auto& f = fs[i / per_f];
    const std::size_t k = i % per_f;
    return mean_value_check(f, pts[k / radii.size()], radii[k % radii.size()], cfg.tol);
  });
  auto closed = mean_value_check(EntireFunction::constant(1.0), 0.0, 1.0, cfg.tol);
  closed.property = "mean_value_closed_case";
  closed.cases.push_back(bound_case("rhs=e-1", std::abs(*closed.cases[0].rhs - (std::numbers::e - 1.0)), 0.0, 1e-9));

  SpaceCache spaces(cfg.tol);
  const auto& two = spaces.get(VariableExponent::constant(2.0));
  const auto& ld = spaces.get(VariableExponent::log_decay(2.0, 1.0));
  const auto eb = run_cases(fs.size() * 2, [&](std::size_t i) {
    return evaluation_bound_check(fs[i / 2], i % 2 ? ld : two, cfg.tol);
  });
  auto k1 = evaluation_bound_check(kernel(1.0), two, cfg.tol);
  k1.property = "evaluation_bound_kernel";
  k1.cases.push_back(bound_case("C(K_1)=1", std::abs(*k1.measured - 1.0), 0.0, 1e-6));
  return {with_threshold(merged("mean_value_lemma", "mean value lemma", mv), 1e-7), with_threshold(closed, 1e-9),
          merged("evaluation_bound", "pointwise evaluation bound", eb), k1};
}

// Inclusion F^{p} into F^{q} for p <= q.
inline std::vector<VerificationReport> inclusion(const SuiteConfig& cfg) {
  SpaceCache spaces(cfg.tol);
  const std::array<std::pair<VariableExponent, VariableExponent>, 2> pairs{
      std::pair{VariableExponent::constant(2.0), VariableExponent::constant(4.0)},
      std::pair{VariableExponent::log_decay(2.0, 1.0), VariableExponent::constant(4.0)}};
  for (const auto& [p, q] : pairs) spaces.get(p), spaces.get(q);
  RandomSource rnd(cfg.seed + 2);
  std::vector<EntireFunction> fs;
  for (std::size_t k = 0; k < capped(50, cfg); ++k) fs.push_back(rnd.function());
  const auto parts = run_cases(fs.size() * pairs.size(), [&](std::size_t i) {
    const auto& [p, q] = pairs[i % pairs.size()];
    return inclusion_check(fs[i / pairs.size()], spaces.get(p), spaces.get(q), cfg.tol);
  });
  auto z = inclusion_check(monomial(1), spaces.get(pairs[0].first), spaces.get(pairs[0].second), cfg.tol);
  z.property = "inclusion_z_example";
  z.cases.push_back(bound_case("|z|_4=8^(-1/4)", std::abs(z.cases[0].extras[1].second - std::pow(8.0, -0.25)), 0.0, 1e-7));
  z.cases.push_back(bound_case("|z|_2=2^(-1/2)", std::abs(z.cases[0].extras[0].second - std::sqrt(0.5)), 0.0, 1e-7));
  return {with_threshold(merged("inclusion", "inclusion between exponents", parts), 1e-6), z};
}

inline std::vector<cplx> square_grid(double half_width, int n) {
  std::vector<cplx> pts;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      pts.emplace_back(-half_width + 2.0 * half_width * a / (n - 1), -half_width + 2.0 * half_width * b / (n - 1));
  return pts;
}

// Reproducing formula and projection identities.
inline std::vector<VerificationReport> reproduce(const SuiteConfig& cfg) {
  const auto fs = corpus();
  const auto grid = square_grid(1.4, 5);  // 25 points, |z| <= 1.98
  const auto repro = run_cases(fs.size(), [&](std::size_t i) {
    VerificationReport r{"reproducing_formula", "reproducing formula", {}, std::nullopt, {}};
    const Integrand g(fs[i]);
    const auto s = project_samples(g, grid, cfg.tol);
    for (std::size_t k = 0; k < grid.size(); ++k)
      r.cases.push_back(bound_case(fs[i].describe() + "@" + to_text(grid[k]), std::abs(s.values[k] - fs[i](grid[k])),
                                   0.0, 1e-7));
    return r;
  });
  std::vector<std::pair<int, int>> mn;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n) mn.emplace_back(m, n);
  const auto agree = run_cases(mn.size(), [&](std::size_t i) {
    const auto [m, n] = mn[i];
    VerificationReport r{"projection_monomials", "projection of w^m conj(w)^n", {}, std::nullopt, {}};
    const auto closed = project_monomial(m, n);
    const auto s = project_samples(conj_monomial(m, n), grid, cfg.tol);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const std::string tag = "m=" + std::to_string(m) + ",n=" + std::to_string(n) + "@" + to_text(grid[k]);
      r.cases.push_back(bound_case(tag, std::abs(s.values[k] - closed(grid[k])), 0.0, 1e-7));
      // Idempotence: the closed form is entire, so projecting it again is the identity.
      if (k % 6 == 0 && !closed.is_zero()) {
        const auto twice = project_pointwise(Integrand(closed), grid[k], cfg.tol);
        r.cases.push_back(bound_case(tag + "|idempotent", std::abs(twice.value - s.values[k]), 0.0, 1e-7));
      }
    }
    return r;
  });
  VerificationReport special{"projection_special_cases", "projection of conj(w) and |w|^2", {}, std::nullopt, {}};
  for (const cplx z : {cplx(0.0, 0.0), cplx(1.0, 0.5), cplx(-1.5, 1.0)}) {
    special.cases.push_back(
        bound_case("P(conj w)@" + to_text(z), std::abs(project_pointwise(conj_monomial(0, 1), z, cfg.tol).value), 0.0, 1e-8));
    special.cases.push_back(bound_case("P(|w|^2)@" + to_text(z),
                                       std::abs(project_pointwise(conj_monomial(1, 1), z, cfg.tol).value - 0.5), 0.0, 1e-8));
  }
  return {merged("reproducing_formula", "reproducing formula", repro),
          merged("projection_monomials", "projection of w^m conj(w)^n", agree), special};
}

// Muckenhoupt products, operator closed forms, projection boundedness.
inline std::vector<VerificationReport> apr(const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  VerificationReport exhibit{"apr_gaussian_exhibit", "the Gaussian weight is not a Muckenhoupt weight", {}, std::nullopt, {}};
  double prev = 0.0;
  const auto gauss = WeightSpec::gaussian(1.0);
  for (const double c : {0.0, 2.0, 4.0, 6.0}) {
    const double v = apr_product(gauss, 2.0, 1.0, c, cfg.tol).value;
    exhibit.cases.push_back(measurement("center=" + to_text(c), v));
    if (c > 0.0) {
      auto inc = bound_case("increase@" + to_text(c), prev, v, 0.0);
      if (!(v > prev)) inc.tolerance = -std::numeric_limits<double>::min();
      exhibit.cases.push_back(std::move(inc));
    }
    prev = v;
  }
  exhibit.measured = prev;
  exhibit.cases.push_back(bound_case("product@6>1e3", 1e3, prev, 0.0));
  out.push_back(std::move(exhibit));

  VerificationReport scale_rep{"apr_scale_invariance", "A_{p,r} product under w -> c w", {}, std::nullopt, {}};
  for (const double c : {0.5, 1.0, 7.0})
    scale_rep.cases.push_back(
        bound_case("const(" + to_text(c) + ")", std::abs(apr_product(WeightSpec::constant(c), 2.0, 1.0, 0.0, cfg.tol).value - 1.0),
                   0.0, 1e-10));
  RandomSource rnd(cfg.seed + 3);
  for (int k = 0; k < 5; ++k) {
    const double c = std::exp(rnd.uniform(-5.0, 5.0));
    const double p0 = rnd.uniform(1.2, 4.0), r = rnd.uniform(0.2, 2.0);
    const cplx center = rnd.in_disk(3.0);
    for (const auto& w : {WeightSpec::gaussian(rnd.uniform(0.1, 2.0)), WeightSpec::power(rnd.uniform(-1.5, 3.0))}) {
      const double base = apr_product(w, p0, r, center, cfg.tol).value;
      const double scaled_v = apr_product(w.scaled(c), p0, r, center, cfg.tol).value;
      scale_rep.cases.push_back(bound_case(w.describe() + "*" + to_text(c), std::abs(scaled_v - base) / base, 0.0, 1e-12));
      // Jensen: the product is always >= 1.
      scale_rep.cases.push_back(bound_case(w.describe() + "|jensen", 1.0, base, 1e-9));
    }
  }
  out.push_back(std::move(scale_rep));

  VerificationReport j{"j_operator_closed_form", "J applied to the constant 1", {}, std::nullopt, {}};
  for (int k = 0; k < 10; ++k) {
    const cplx w = std::polar(0.2 * (k + 1), 0.7 * k);
    const double exact = std::numbers::pi / 2.0 * std::exp(std::norm(w) / 2.0);
    j.cases.push_back(bound_case("w=" + to_text(w), std::abs(j_operator(EntireFunction::constant(1.0), w, cfg.tol).value / exact - 1.0),
                                 0.0, 1e-7));
  }
  // Monotonicity: |z| <= |z|^2 + 1 pointwise.
  for (const cplx w : {cplx(0.0, 0.0), cplx(1.0, -1.0)}) {
    const double a = j_operator(monomial(1), w, cfg.tol).value;
    const double b = j_operator(EntireFunction({1.0, 0.0, 1.0}, {}), w, cfg.tol).value;
    j.cases.push_back(bound_case("monotone@" + to_text(w), a, b, cfg.tol));
  }
  out.push_back(std::move(j));

  VerificationReport h{"h_operator", "H on constants and Gaussians", {}, std::nullopt, {}};
  for (const cplx z : {cplx(0.0, 0.0), cplx(1.0, 2.0), cplx(-3.0, 0.5)})
    h.cases.push_back(bound_case("H1@" + to_text(z),
                                 std::abs(h_operator(EntireFunction::constant(1.0), z, cfg.tol).value - std::numbers::pi), 0.0, 1e-8));
  const Integrand gauss_fn("exp(-|u|^2)", [](cplx u) { return cplx(std::exp(-std::norm(u))); }, GrowthBound{1.0, 0.0, 0.0, -1.0});
  h.cases.push_back(bound_case("H(exp(-|u|^2))@0", std::abs(h_operator(gauss_fn, 0.0, cfg.tol).value - std::numbers::pi / 2.0), 0.0, 1e-8));
  out.push_back(std::move(h));

  // Projection boundedness sampled on p = 2 and a log-decay exponent.
  std::vector<ProjectionCase> base{projection_case_entire(EntireFunction::constant(1.0)), projection_case_monomial(0, 1)};
  for (const cplx a : {cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, -1.0), cplx(0.5, 0.5), cplx(-0.7, 0.2)})
    base.push_back(projection_case_entire(kernel(a)));
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n)
      if (m + n > 0) base.push_back(projection_case_monomial(m, n));
  std::vector<ProjectionCase> extension;
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{5, 0}, {3, 2}, {2, 3}, {5, 1}, {4, 2}})
    extension.push_back(projection_case_monomial(m, n));
  for (const cplx a : {cplx(0.9, 0.3), cplx(-0.2, -0.8), cplx(0.6, -0.6), cplx(-1.0, 0.0), cplx(0.1, 0.95)})
    extension.push_back(projection_case_entire(kernel(a)));
  for (const auto& p : {VariableExponent::constant(2.0), VariableExponent::log_decay(2.0, 1.0)}) {
    const FockModular space(p, cfg.tol);
    auto r = projection_boundedness_sample(space, base, extension, cfg.tol);
    r.property += "|" + p.describe();
    out.push_back(std::move(r));
  }
  return out;
}

// Difference quotients of kernels approaching z.
inline std::vector<VerificationReport> density(const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  for (const auto& p : {VariableExponent::constant(2.0), VariableExponent::log_decay(2.0, 1.0)}) {
    const FockModular space(p, cfg.tol);
    out.push_back(kernel_density_probe(space, 0.25, cfg.tol));
  }
  return out;
}

// Log-Holder reports for the shipped families and the two counterexamples.
inline std::vector<VerificationReport> regularity(const SuiteConfig&) {
  std::vector<VerificationReport> out;
  std::vector<cplx> centers;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) centers.emplace_back(a, b);
  const std::vector<double> small{0.1, 0.25};
  const std::vector<double> far{0.0, 1.0, 10.0, 100.0, 1000.0};
  for (const double c : {2.0, 3.0}) {
    const auto p = VariableExponent::constant(c);
    auto local = check_log_holder_local(p, small, centers);
    local.cases.push_back(bound_case("local=1", std::abs(*local.measured - 1.0), 0.0, 0.0));
    out.push_back(std::move(local));
    auto decay = check_log_holder_decay(p, far);
    decay.cases.push_back(bound_case("decay=0", *decay.measured, 0.0, 0.0));
    out.push_back(std::move(decay));
  }
  auto ld = check_log_holder_decay(VariableExponent::log_decay(2.0, 1.0), far);
  ld.cases.push_back(bound_case("decay=1", std::abs(*ld.measured - 1.0), 0.0, 1e-9));
  out.push_back(std::move(ld));
  const auto bump = VariableExponent::radial_bump(2.0, 1.0, 1.0);
  auto b1 = check_log_holder_local(bump, std::vector<double>{0.25}, centers);
  auto b2 = check_log_holder_local(bump, std::vector<double>{0.1}, centers);
  auto lip = b2;
  lip.property = "log_holder_local|radial_bump";
  lip.cases.push_back(bound_case("bounded as r shrinks", *b2.measured, *b1.measured, 1e-12));
  out.push_back(std::move(lip));
  const auto step = VariableExponent::custom(
      "step", [](cplx z) { return z.real() < 0.0 ? 2.0 : 3.0; }, 2.0, 3.0);
  const std::vector<cplx> origin{0.0};
  auto s = check_log_holder_local(step, std::vector<double>{0.5, 0.1, 0.02}, origin);
  s.property = "log_holder_local|step";
  s.notes.push_back("discontinuous exponent: constant grows like |B|^-1");
  out.push_back(std::move(s));
  const auto wavy = VariableExponent::expression("2 + 0.5*sin(abs(z))", 1.5, 2.5, 2.0);
  auto w = check_log_holder_decay(wavy, std::vector<double>{10.0, 100.0, 1000.0 + std::numbers::pi / 2.0 - std::fmod(1000.0, 2.0 * std::numbers::pi)});
  w.property = "log_holder_decay|oscillating";
  w.notes.push_back("no decay toward p_inf: constant grows with the sample radius");
  out.push_back(std::move(w));
  return out;
}

// Normalization, quadrature and norm oracles, constant-exponent reduction,
// homogeneity, triangle inequality, unit-ball consistency, duality.
inline std::vector<VerificationReport> norms(const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  SpaceCache spaces(cfg.tol);
  VerificationReport unit{"normalization", "the constant 1 has modular 1", {}, std::nullopt, {}};
  for (const auto& p : {VariableExponent::constant(2.0), VariableExponent::constant(3.0),
                        VariableExponent::log_decay(2.0, 1.0), VariableExponent::radial_bump(2.0, 1.0, 1.0)}) {
    const double v = spaces.get(p).modular(EntireFunction::constant(1.0)).value;
    unit.cases.push_back(bound_case(p.describe(), std::abs(v - 1.0), 0.0, 1e-8));
  }
  out.push_back(std::move(unit));

  VerificationReport quad{"quadrature_moments", "Gaussian moments of |z|^2n", {}, std::nullopt, {}};
  double fact = 1.0;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) fact *= n;
    const auto r = integrate_plane([n](cplx z) { return std::pow(std::norm(z), n) * std::exp(-2.0 * std::norm(z)); },
                                   DecayBound{1.0, 2 * n, 2.0}, 1e-12);
    const double exact = std::numbers::pi * fact / std::pow(2.0, n + 1);
    quad.cases.push_back(bound_case("n=" + std::to_string(n), std::abs(r.value / exact - 1.0), 0.0, 1e-8));
  }
  out.push_back(std::move(quad));

  VerificationReport mono{"norm_monomials", "F^2 norms of monomials", {}, std::nullopt, {}};
  const auto& two = spaces.get(VariableExponent::constant(2.0));
  fact = 1.0;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) fact *= n;
    mono.cases.push_back(bound_case("n=" + std::to_string(n),
                                    std::abs(two.norm(monomial(n)).value - std::sqrt(fact / std::pow(2.0, n))), 0.0, 1e-7));
  }
  out.push_back(std::move(mono));

  RandomSource rnd(cfg.seed + 4);
  std::vector<EntireFunction> fs;
  for (std::size_t k = 0; k < capped(50, cfg); ++k) fs.push_back(rnd.function());
  const std::array<double, 3> p0s{1.5, 2.0, 4.0};
  for (const double p0 : p0s) spaces.get(VariableExponent::constant(p0));
  const auto red = run_cases(fs.size() * p0s.size(), [&](std::size_t i) {
    const double p0 = p0s[i % p0s.size()];
    const auto& s = spaces.get(VariableExponent::constant(p0));
    const auto& f = fs[i / p0s.size()];
    const double n = s.norm(f).value;
    const double rho = s.modular(f).value;
    VerificationReport r{"constant_exponent_reduction", "norm = modular^(1/p0)", {}, std::nullopt, {}};
    r.cases.push_back(bound_case(f.describe() + "|p0=" + to_text(p0), std::abs(n - std::pow(rho, 1.0 / p0)), 0.0, 1e-7));
    return r;
  });
  out.push_back(with_threshold(merged("constant_exponent_reduction", "norm = modular^(1/p0)", red), 1e-7));

  const auto pool = exponent_pool(rnd, 4);
  for (const auto& p : pool) spaces.get(p), spaces.get(conjugate(p));
  const std::size_t n_props = capped(20, cfg);
  std::vector<EntireFunction> gs;
  std::vector<cplx> cs;
  for (std::size_t k = 0; k < n_props; ++k) {
    gs.push_back(rnd.function());
    cs.push_back(rnd.in_disk(3.0));
  }
  const auto props = run_cases(n_props, [&](std::size_t i) {
    const auto& s = spaces.get(pool[i % pool.size()]);
    const auto& f = fs[i];
    const auto& g = gs[i];
    const std::string tag = f.describe() + "|" + s.exponent().describe();
    const auto nf = s.norm(f), ng = s.norm(g), nfg = s.norm(f + g), ncf = s.norm(cs[i] * f);
    VerificationReport r{"norm_properties", "norm axioms and unit-ball consistency", {}, std::nullopt, {}};
    r.cases.push_back(bound_case(tag + "|homogeneity", std::abs(ncf.value - std::abs(cs[i]) * nf.value), 0.0,
                                 ncf.value_error + std::abs(cs[i]) * nf.value_error + 1e-7));
    r.cases.push_back(bound_case(tag + "|triangle", nfg.value, nf.value + ng.value,
                                 nfg.value_error + nf.value_error + ng.value_error + 1e-7));
    r.cases.push_back(bound_case(tag + "|unit_ball", std::abs(s.modular(f, nf.value).value - 1.0), 0.0, 1e-7));
    return r;
  });
  out.push_back(merged("norm_properties", "norm axioms and unit-ball consistency", props));

  // Duality in F^{p'}: a few corpus functions against the corpus.
  const auto cf = corpus();
  const std::vector<EntireFunction> tests(cf.begin(), cf.begin() + 10);
  const auto dual_parts = run_cases(std::min<std::size_t>(4, cfg.budget), [&](std::size_t i) {
    const auto& p = pool[i % pool.size()];
    return duality_check(cf[10 + i], tests, spaces.get(p), spaces.get(conjugate(p)), cfg.tol);
  });
  out.push_back(with_threshold(merged("duality", "dual space representation", dual_parts), 1e-6));
  return out;
}

using SuiteFn = std::function<std::vector<VerificationReport>(const SuiteConfig&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"holder", holder}, {"equiv", equiv},     {"eval", eval},         {"inclusion", inclusion}, {"reproduce", reproduce},
      {"apr", apr},       {"density", density}, {"regularity", regularity}, {"norms", norms}};
  return r;
}

// "all" runs every registered suite in registry order.
inline std::vector<VerificationReport> run(const std::string& name, const SuiteConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw InputError("tolerance must be positive");
  std::vector<VerificationReport> out;
  bool found = false;
  for (const auto& [n, fn] : registry()) {
    if (name != "all" && name != n) continue;
    found = true;
    auto part = fn(cfg);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (!found) throw InputError("unknown suite '" + name + "'");
  return out;
}

}  // namespace fockvar::suites
