#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fockvar/error.hpp"
#include "fockvar/exponents.hpp"
#include "fockvar/functions.hpp"
#include "fockvar/modular.hpp"
#include "fockvar/parallel.hpp"
#include "fockvar/quadrature.hpp"
#include "fockvar/report.hpp"

namespace fockvar {

// w(z) = scale * shape(z) with shape 1, exp(-beta |z|^2) or (1+|z|)^gamma.
class WeightSpec {
 public:
  struct Constant {};
  struct Gaussian {
    double beta;
  };
  struct Power {
    double gamma;
  };
  using Shape = std::variant<Constant, Gaussian, Power>;

  static WeightSpec constant(double c) { return WeightSpec(c, Constant{}); }
  static WeightSpec gaussian(double beta, double scale = 1.0) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw InputError("gaussian weight needs beta > 0");
    return WeightSpec(scale, Gaussian{beta});
  }
  static WeightSpec power(double gamma, double scale = 1.0) {
    if (!(gamma > -2.0) || !std::isfinite(gamma)) throw InputError("power weight needs gamma > -2");
    return WeightSpec(scale, Power{gamma});
  }

  double scale() const { return scale_; }
  const Shape& shape() const { return shape_; }
  WeightSpec scaled(double c) const { return WeightSpec(scale_ * c, shape_); }

  double operator()(cplx z) const {
    return scale_ * std::visit([z](const auto& s) { return shape_value(s, z); }, shape_);
  }

  std::string describe() const {
    const std::string s = std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Constant>) return "const";
          else if constexpr (std::is_same_v<T, Gaussian>) return "gaussian(" + to_text(v.beta) + ")";
          else return "power(" + to_text(v.gamma) + ")";
        },
        shape_);
    return to_text(scale_) + "*" + s;
  }

  static double shape_value(const Constant&, cplx) { return 1.0; }
  static double shape_value(const Gaussian& g, cplx z) { return std::exp(-g.beta * std::norm(z)); }
  static double shape_value(const Power& p, cplx z) { return std::pow(1.0 + std::abs(z), p.gamma); }

 private:
  WeightSpec(double scale, Shape shape) : scale_(scale), shape_(shape) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw InputError("weight scale must be positive");
  }

  double scale_;
  Shape shape_;
};

// (avg_B w)(avg_B w^{-1/(p0-1)})^{p0-1} over B = B(center, r). The scale of
// w cancels algebraically, so only the shape is integrated; the Gaussian
// shape is taken relative to its value at the center for the same reason.
inline Estimate<double> apr_product(const WeightSpec& w, double p0, double r, cplx center, double tol) {
  if (!(p0 > 1.0) || !std::isfinite(p0)) throw InputError("apr_product needs p0 > 1");
  if (!(r > 0.0) || !std::isfinite(r)) throw InputError("apr_product needs r > 0");
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  const double dual = -1.0 / (p0 - 1.0);
  const auto shape = [&](cplx z) {
    if (const auto* g = std::get_if<WeightSpec::Gaussian>(&w.shape()))
      return std::exp(-g->beta * (std::norm(z) - std::norm(center)));
    return std::visit([z](const auto& s) { return WeightSpec::shape_value(s, z); }, w.shape());
  };
  if (std::holds_alternative<WeightSpec::Constant>(w.shape())) return {1.0, 0.0};
  const double area = std::numbers::pi * r * r;
  QuadratureOptions o;
  // (1 + |z|)^gamma has a cone point at the origin.
  if (std::holds_alternative<WeightSpec::Power>(w.shape())) o.singular_points = {cplx{0.0, 0.0}};
  // Relative accuracy tol/8 per average, measured against the center value.
  const auto a = integrate_disk(shape, center, r, tol / 8.0 * area * shape(center), o);
  const auto b = integrate_disk([&](cplx z) { return std::pow(shape(z), dual); }, center, r,
                                tol / 8.0 * area * std::pow(shape(center), dual), o);
  const double avg_a = a.value / area, avg_b = b.value / area;
  const double value = avg_a * std::pow(avg_b, p0 - 1.0);
  const double rel = a.error / a.value + (p0 - 1.0) * b.error / b.value;
  return {value, value * rel};
}

// Pg(z) = (2/pi) int g(w) exp(2 conj(w) z) exp(-2|w|^2) dA(w). The rule is
// centered at z/2 where the kernel times the weight peaks.
template <Evaluand G>
Estimate<cplx> project_pointwise(const G& g, cplx z, double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (vanishes(g)) return {};
  const cplx c = z / 2.0;
  const auto growth = scaled(translated(g.growth(), c), std::exp(std::norm(z) / 2.0));
  QuadratureOptions o;
  o.center = c;
  const auto r = integrate_plane(
      [&](cplx w) { return cplx(g(w)) * std::exp(2.0 * std::conj(w) * z - 2.0 * std::norm(w)); },
      gaussian_decay(growth, 2.0), tol * std::numbers::pi / 2.0, o);
  return {r.value * (2.0 / std::numbers::pi), r.error * (2.0 / std::numbers::pi)};
}

// P(w^m conj(w)^n) = m! / ((m-n)! 2^n) z^{m-n} for m >= n, else 0.
inline EntireFunction project_monomial(int m, int n) {
  if (m < 0 || n < 0) throw InputError("monomial exponents must be non-negative");
  if (m < n) return {};
  double c = 1.0;
  for (int k = m - n + 1; k <= m; ++k) c *= k / 2.0;
  return scale(c, monomial(m - n));
}

struct OperatorSample {
  std::vector<cplx> points;
  std::vector<cplx> values;
  std::vector<double> errors;
};

template <Evaluand G>
OperatorSample project_samples(const G& g, const std::vector<cplx>& points, double tol) {
  OperatorSample s{points, std::vector<cplx>(points.size()), std::vector<double>(points.size())};
  parallel_for(points.size(), [&](std::size_t i) {
    const auto e = project_pointwise(g, points[i], tol);
    s.values[i] = e.value;
    s.errors[i] = e.error;
  });
  return s;
}

// Hf(z) = int exp(-|z-u|^2) f(u) dA(u).
template <Evaluand F>
Estimate<cplx> h_operator(const F& f, cplx z, double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (vanishes(f)) return {};
  QuadratureOptions o;
  o.center = z;
  const auto r = integrate_plane([&](cplx u) { return cplx(f(u)) * std::exp(-std::norm(z - u)); },
                                 gaussian_decay(translated(f.growth(), z), 1.0), tol, o);
  return {r.value, r.error};
}

// Jg(w) = int |g(z) exp(2 conj(z) w) exp(-2|z|^2)| dA(z), centered at w/2.
template <Evaluand G>
Estimate<double> j_operator(const G& g, cplx w, double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (vanishes(g)) return {};
  const cplx c = w / 2.0;
  const auto growth = scaled(translated(g.growth(), c), std::exp(std::norm(w) / 2.0));
  QuadratureOptions o;
  o.center = c;
  o.best_effort = true;
  const auto decay = gaussian_decay(growth, 2.0);
  o.singular_points = singular_points(g, std::abs(c) + tail_radius(decay, tol / 10.0));
  const auto r = integrate_plane(
      [&](cplx z) { return std::abs(cplx(g(z))) * std::exp(2.0 * (std::conj(z) * w).real() - 2.0 * std::norm(z)); },
      decay, tol, o);
  return {r.value, r.error};
}

// |f(z)| e^{-|z|^2} <= e^{R^2}/(R^2 pi) int_{B(z,R)} |f(w)| e^{-|w|^2} dA(w).
inline VerificationReport mean_value_check(const EntireFunction& f, cplx z, double R, double tol) {
  if (!(R > 0.0) || !std::isfinite(R)) throw InputError("mean value radius must be positive");
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  const double factor = std::exp(R * R) / (R * R * std::numbers::pi);
  const double lhs = std::abs(f(z)) * std::exp(-std::norm(z));
  double rhs = 0.0, err = 0.0;
  if (!f.is_zero()) {
    // |f| has cone points at zeros of f; the quadrature's own error carries
    // the unresolved part into the case tolerance.
    QuadratureOptions o;
    o.best_effort = true;
    o.max_depth = 10;
    o.singular_points = f.zeros(std::abs(z) + R);
    const auto r = integrate_disk([&](cplx w) { return std::abs(f(w)) * std::exp(-std::norm(w)); }, z, R,
                                  tol / (2.0 * factor), o);
    rhs = factor * r.value;
    err = factor * r.error;
  }
  VerificationReport rep{"mean_value_lemma", "mean value lemma", {}, std::nullopt, {}};
  auto c = bound_case(f.describe() + "@" + to_text(z) + ",R=" + to_text(R), lhs, rhs, tol + err);
  c.extras = {{"quad_error", err}};
  rep.cases.push_back(std::move(c));
  return rep;
}

// Square grid of spacing h clipped to the disk |z| <= radius.
struct PointGrid {
  double radius = 4.0;
  double spacing = 0.25;

  std::vector<cplx> points() const {
    std::vector<cplx> out;
    const int n = static_cast<int>(std::floor(radius / spacing + 1e-9));
    for (int i = -n; i <= n; ++i)
      for (int j = -n; j <= n; ++j) {
        const cplx z(i * spacing, j * spacing);
        if (std::abs(z) <= radius * (1.0 + 1e-12)) out.push_back(z);
      }
    return out;
  }
  PointGrid refined() const { return {radius, spacing / 2.0}; }
};

// sup over points of |f(z)| e^{-|z|^2} / norm.
inline double evaluation_constant(const EntireFunction& f, double norm, const std::vector<cplx>& points) {
  if (!(norm > 0.0)) throw InputError("evaluation bound needs a nonzero function");
  double c = 0.0;
  for (const cplx z : points) c = std::max(c, std::abs(f(z)) * std::exp(-std::norm(z)) / norm);
  return c;
}

// |f(z)| <= C e^{|z|^2} ||f||: reports C on the grid and asserts it moves by
// less than 5% when the grid spacing is halved.
inline VerificationReport evaluation_bound_check(const EntireFunction& f, const FockModular& space, double tol,
                                                 const PointGrid& grid = {}) {
  if (f.is_zero()) throw InputError("evaluation bound needs a nonzero function");
  const auto n = space.norm(f);
  const double coarse = evaluation_constant(f, n.value, grid.points());
  const double fine = evaluation_constant(f, n.value, grid.refined().points());
  VerificationReport rep{"evaluation_bound", "pointwise evaluation bound", {}, fine, {}};
  const std::string tag = f.describe() + "|" + space.exponent().describe();
  auto m = measurement(tag, fine);
  m.extras = {{"coarse", coarse}, {"norm", n.value}};
  rep.cases.push_back(std::move(m));
  rep.cases.push_back(bound_case(tag + "|stability", fine, 1.05 * coarse, tol));
  if (!std::isfinite(fine)) rep.cases.push_back(bound_case(tag + "|finite", 1.0, 0.0, 0.0));
  return rep;
}

// Same measurement on caller-supplied points, no stability assertion.
inline VerificationReport evaluation_bound_check(const EntireFunction& f, const std::vector<cplx>& points,
                                                 const FockModular& space) {
  if (f.is_zero()) throw InputError("evaluation bound needs a nonzero function");
  const double c = evaluation_constant(f, space.norm(f).value, points);
  VerificationReport rep{"evaluation_bound", "pointwise evaluation bound", {}, c, {}};
  rep.cases.push_back(measurement(f.describe() + "|" + space.exponent().describe(), c));
  return rep;
}

// ||f||_q / ||f||_p <= M with M = max(1, C1^{q+ - p-} C_p / C_q)^{1/q-} where
// C1 >= 1 bounds |f(z)| e^{-|z|^2} / ||f||_p (measured on the default grid).
inline VerificationReport inclusion_check(const EntireFunction& f, const FockModular& p_space,
                                          const FockModular& q_space, double tol) {
  const auto& p = p_space.exponent();
  const auto& q = q_space.exponent();
  for (const cplx z : reference_points())
    if (p(z) > q(z) + 1e-12) throw InputError("inclusion needs p(z) <= q(z); violated at " + to_text(z));
  VerificationReport rep{"inclusion", "inclusion between exponents", {}, std::nullopt, {}};
  const std::string tag = f.describe() + "|" + p.describe() + "<=" + q.describe();
  if (f.is_zero()) {
    rep.cases.push_back(bound_case(tag, 0.0, 0.0, tol));
    return rep;
  }
  const auto np = p_space.norm(f);
  const auto nq = q_space.norm(f);
  const double c1 = std::max(1.0, evaluation_constant(f, np.value, PointGrid{}.points()));
  const double M = std::pow(std::max(1.0, std::pow(c1, q.p_plus() - p.p_minus()) * p_space.gauge() / q_space.gauge()),
                            1.0 / q.p_minus());
  const double ratio = nq.value / np.value;
  const double err = ratio * (nq.value_error / nq.value + np.value_error / np.value);
  auto c = bound_case(tag, ratio, M, tol + err);
  c.extras = {{"norm_p", np.value}, {"norm_q", nq.value}, {"C1", c1}};
  rep.cases.push_back(std::move(c));
  rep.measured = ratio;
  return rep;
}

// An integrand together with its closed-form projection.
struct ProjectionCase {
  std::string label;
  Integrand g;
  EntireFunction projection;
};

inline ProjectionCase projection_case_monomial(int m, int n) {
  return {"w^" + std::to_string(m) + "conj(w)^" + std::to_string(n), conj_monomial(m, n), project_monomial(m, n)};
}

inline ProjectionCase projection_case_entire(const EntireFunction& f) {
  return {f.describe(), Integrand(f), f};
}

// Sampling evidence for boundedness of P on L^{p(.)}: the sup over the test
// set of ||Pg|| / ||g||, with the closed-form projections cross-checked
// against quadrature at a few points, and the sup compared with the sup over
// the test set plus the extension (must move by less than 10%).
inline VerificationReport projection_boundedness_sample(const FockModular& space,
                                                        const std::vector<ProjectionCase>& test_set,
                                                        const std::vector<ProjectionCase>& extension, double tol) {
  VerificationReport rep{"projection_boundedness", "boundedness of the projection", {}, std::nullopt, {}};
  rep.notes.push_back("sampling evidence, not a proof");
  const std::vector<cplx> probes{{0.0, 0.0}, {0.5, -0.25}, {-1.0, 0.75}};
  std::vector<ProjectionCase> all = test_set;
  all.insert(all.end(), extension.begin(), extension.end());
  std::vector<CaseRecord> records(all.size());
  std::vector<double> ratios(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    const auto& pc = all[i];
    double worst = 0.0, worst_err = 0.0;
    for (const cplx z : probes) {
      const auto e = project_pointwise(pc.g, z, tol);
      const double d = std::abs(e.value - pc.projection(z));
      if (d - e.error > worst - worst_err) worst = d, worst_err = e.error;
    }
    const double ng = space.norm(pc.g).value;
    const double np = space.norm(pc.projection).value;
    ratios[i] = ng > 0.0 ? np / ng : 0.0;
    auto c = bound_case(pc.label + "|closed_form", worst, 0.0, 100.0 * tol + worst_err);
    c.extras = {{"ratio", ratios[i]}, {"norm_g", ng}, {"norm_Pg", np}};
    records[i] = std::move(c);
  });
  rep.cases = std::move(records);
  const double base = test_set.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.begin() + test_set.size());
  const double extended = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
  rep.measured = extended;
  rep.cases.push_back(bound_case("finite", extended, std::numeric_limits<double>::max(), 0.0));
  if (!extension.empty() && base > 0.0)
    rep.cases.push_back(bound_case("stability", std::abs(extended - base) / base, 0.1, 0.0));
  return rep;
}

// (K_h - K_0)/(2h) - z: first-order difference quotient of a -> K_a / 2 at 0.
inline EntireFunction density_residual(double h) {
  return EntireFunction({0.0, -1.0}, {{1.0 / (2.0 * h), h}, {-1.0 / (2.0 * h), 0.0}});
}

// d(h) for h, h/2, h/4: strictly decreasing with log-log slope in [0.8, 1.2].
inline VerificationReport kernel_density_probe(const FockModular& space, double h, double tol) {
  if (!(h > 0.0) || h > 0.25) throw InputError("density probe needs 0 < h <= 1/4");
  VerificationReport rep{"kernel_density", "density of reproducing kernels", {}, std::nullopt, {}};
  const std::string tag = space.exponent().describe();
  const std::array<double, 3> hs{h, h / 2.0, h / 4.0};
  std::array<double, 3> d{};
  for (std::size_t i = 0; i < 3; ++i) {
    d[i] = space.norm(density_residual(hs[i])).value;
    rep.cases.push_back(measurement(tag + "|d(" + to_text(hs[i]) + ")", d[i]));
  }
  // Strict decrease: zero tolerance on d(h/2) <= d(h), equality also rejected.
  for (std::size_t i = 1; i < 3; ++i) {
    auto c = bound_case(tag + "|decrease@" + to_text(hs[i]), d[i], d[i - 1], 0.0);
    if (!(d[i] < d[i - 1])) c.tolerance = -std::numeric_limits<double>::min();
    rep.cases.push_back(std::move(c));
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double x = std::log(hs[i]), y = std::log(d[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double slope = (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx);
  rep.measured = slope;
  auto c = bound_case(tag + "|slope", std::abs(slope - 1.0), 0.2, 0.0);
  c.extras = {{"slope", slope}};
  rep.cases.push_back(std::move(c));
  (void)tol;
  return rep;
}

// Dual-space margin for h in F^{p'}: the sup over unit-norm test functions in
// F^{p} of |<f, h>| lies in [||h||_{p'}, (4/pi) ||h||_{p'}]. The test set is
// the given functions plus the extremal witness of h, which carries the lower
// bound; the others can only raise the sup.
inline VerificationReport duality_check(const EntireFunction& h, const std::vector<EntireFunction>& tests,
                                        const FockModular& space, const FockModular& dual, double tol) {
  VerificationReport rep{"duality", "dual space representation", {}, std::nullopt, {}};
  const std::string tag = h.describe() + "|" + dual.exponent().describe();
  const auto witness = triple_norm(h, dual, space, tol);
  const double nh = *witness.luxemburg;
  double sup = witness.value;
  double err = witness.value_error;
  for (const auto& f : tests) {
    if (f.is_zero()) continue;
    const auto nf = space.norm(f);
    const auto pr = pairing(f, h, tol);
    const double v = std::abs(pr.value) / nf.value;
    if (v > sup) {
      sup = v;
      err = pr.error / nf.value + v * nf.value_error / nf.value;
    }
  }
  rep.measured = sup;
  rep.cases.push_back(bound_case(tag + "|lower", nh, sup, tol + err + witness.value_error));
  rep.cases.push_back(bound_case(tag + "|upper", sup, 4.0 / std::numbers::pi * nh, tol + err));
  return rep;
}

}  // namespace fockvar
