#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "fockvar/error.hpp"
#include "fockvar/parallel.hpp"
#include "fockvar/report.hpp"

namespace fockvar {

using cplx = std::complex<double>;

// Pointwise envelope |g(z)| <= scale * max(1,|z|)^degree * exp(linear*|z| + quadratic*|z|^2).
struct GrowthBound {
  double scale = 1.0;
  double degree = 0.0;
  double linear = 0.0;
  double quadratic = 0.0;

  double at(double r) const {
    return scale * std::pow(std::max(1.0, r), degree) * std::exp(linear * r + quadratic * r * r);
  }
};

inline GrowthBound operator*(const GrowthBound& a, const GrowthBound& b) {
  return {a.scale * b.scale, a.degree + b.degree, a.linear + b.linear, a.quadratic + b.quadratic};
}

inline GrowthBound scaled(GrowthBound g, double factor) {
  g.scale *= std::abs(factor);
  return g;
}

// Envelope of |g|^p for every p <= p_max, using |g|^p <= max(1,|g|)^p_max.
inline GrowthBound power_bound(const GrowthBound& g, double p_max) {
  return {std::pow(std::max(1.0, g.scale), p_max), g.degree * p_max, std::max(0.0, g.linear) * p_max,
          std::max(0.0, g.quadratic) * p_max};
}

// Envelope of v -> g(shift + v), from |s+v|^2 <= 2|s|^2 + 2|v|^2 when the
// quadratic part grows and |s+v|^2 >= |v|^2/2 - |s|^2 when it decays.
inline GrowthBound translated(const GrowthBound& g, cplx shift) {
  const double s = std::abs(shift);
  const double q = g.quadratic;
  const double factor = std::abs(g.linear) * s + (q > 0.0 ? 2.0 * q * s * s : -q * s * s);
  return {g.scale * std::pow(1.0 + s, g.degree) * std::exp(factor), g.degree, g.linear,
          q > 0.0 ? 2.0 * q : q / 2.0};
}

// Certified tail envelope: |integrand(v)| <= scale * |v|^degree * exp(-rate |v|^2) for |v| >= 1.
struct DecayBound {
  double scale = 1.0;
  int degree = 0;
  double rate = 1.0;
};

// Envelope of g(v) * exp(-rate |v|^2). A linear term is absorbed through
// L r <= L^2/(2 eff) + eff r^2 / 2, which halves the effective rate.
inline DecayBound gaussian_decay(const GrowthBound& g, double rate) {
  const double eff = rate - g.quadratic;
  if (!(eff > 0.0)) throw NumericalError("integrand is not dominated by a Gaussian");
  DecayBound d{g.scale, static_cast<int>(std::ceil(g.degree - 1e-12)), eff};
  if (g.linear > 0.0) {
    d.scale *= std::exp(g.linear * g.linear / (2.0 * eff));
    d.rate = eff / 2.0;
  }
  return d;
}

// Closed-form bound on the integral of the envelope over |v| > R.
inline double tail_bound(const DecayBound& b, double radius) {
  const double d = b.degree, beta = b.rate;
  const double correction = 1.0 - d / (2.0 * beta * radius * radius);
  if (correction <= 0.0) return std::numeric_limits<double>::infinity();
  return b.scale * std::pow(radius, d) * std::exp(-beta * radius * radius) * std::numbers::pi / beta / correction;
}

// Smallest R >= max(1, sqrt(degree/rate)) with tail_bound(R) <= target. The
// bound is decreasing on that range.
inline double tail_radius(const DecayBound& b, double target) {
  if (!(b.rate > 0.0)) throw NumericalError("decay rate must be positive");
  const double r_min = std::max(1.0, std::sqrt(b.degree / b.rate));
  if (tail_bound(b, r_min) <= target) return r_min;
  double lo = r_min, hi = 2.0 * r_min;
  while (tail_bound(b, hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw NumericalError("no finite truncation radius meets the tail target");
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tail_bound(b, mid) <= target ? hi : lo) = mid;
  }
  return hi;
}

// One trapezoid circle of a polar rule. weight already contains the radial
// Gauss-Legendre weight and the Jacobian r; node j sits at angle 2*pi*j/angles.
struct Ring {
  double radius;
  double weight;
  int angles;
  // Explicit (theta, dtheta-weight) nodes from adaptive angular refinement;
  // empty for the uniform trapezoid rule.
  std::vector<std::pair<double, double>> nodes = {};
};

// A tensor polar rule around a center: sum over rings of
// weight * (2*pi/angles) * sum_j f(center + r e^{2 pi i j / angles}).
struct PolarRule {
  cplx center{0.0, 0.0};
  double outer_radius = 0.0;
  std::vector<Ring> rings;

  template <class Fn>
  void for_each_node(Fn&& fn) const {
    for (const auto& ring : rings) {
      if (!ring.nodes.empty()) {
        for (const auto& [theta, w] : ring.nodes) fn(center + std::polar(ring.radius, theta), ring.weight * w);
        continue;
      }
      const double w = ring.weight * 2.0 * std::numbers::pi / ring.angles;
      for (int j = 0; j < ring.angles; ++j)
        fn(center + std::polar(ring.radius, 2.0 * std::numbers::pi * j / ring.angles), w);
    }
  }

  template <class F>
  auto apply(const F& f) const {
    using T = std::decay_t<std::invoke_result_t<const F&, cplx>>;
    long double re = 0.0L, im = 0.0L;
    for_each_node([&](cplx z, double w) {
      const T v = f(z);
      if constexpr (std::is_same_v<T, cplx>) {
        re += static_cast<long double>(w) * v.real();
        im += static_cast<long double>(w) * v.imag();
      } else {
        re += static_cast<long double>(w) * v;
      }
    });
    if constexpr (std::is_same_v<T, cplx>) return cplx(static_cast<double>(re), static_cast<double>(im));
    else return static_cast<double>(re);
  }

  // Equals pi * outer_radius^2 up to rounding: Gauss-Legendre is exact on r dr.
  double total_weight() const {
    long double s = 0.0L;
    for (const auto& ring : rings) s += 2.0L * std::numbers::pi_v<long double> * ring.weight;
    return static_cast<double>(s);
  }

  std::size_t node_count() const {
    std::size_t n = 0;
    for (const auto& ring : rings) n += ring.nodes.empty() ? static_cast<std::size_t>(ring.angles) : ring.nodes.size();
    return n;
  }
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  PolarRule rule;
  double tail_bound = 0.0;
  std::size_t evaluations = 0;

  template <class Fn>
  void for_each_node(Fn&& fn) const {
    rule.for_each_node(fn);
  }
};

// A value with an absolute error estimate.
template <class T>
struct Estimate {
  T value{};
  double error = 0.0;
};

struct QuadratureOptions {
  double panel_width = 0.5;
  double min_radius = 0.0;  // lower limit for the plane truncation radius
  int initial_angles = 64;
  int trapezoid_switch = 256;  // doubling stops here; adaptive angular rule takes over
  int max_depth = 30;
  std::size_t max_panels = 1u << 15;
  std::vector<double> breakpoints;  // radii measured from the rule center
  // On an exhausted refinement budget keep the last estimate and report the
  // last refinement difference as its error instead of throwing. For
  // integrands with isolated kinks such as |f| at zeros of f.
  bool best_effort = false;
  cplx center{0.0, 0.0};
  // Points where the integrand has a kink (zeros of f under |f|^p). Their
  // distances from the center become radial breakpoints, and rings that pass
  // near one use Gauss-Legendre segments split at its angle.
  std::vector<cplx> singular_points;
};

namespace detail {

constexpr int gl_points = 16;

inline const std::array<std::pair<double, double>, gl_points>& gauss_legendre_16() {
  static const auto table = [] {
    using rule = boost::math::quadrature::gauss<double, gl_points>;
    std::array<std::pair<double, double>, gl_points> t{};
    const auto& x = rule::abscissa();
    const auto& w = rule::weights();
    std::size_t k = 0;
    for (std::size_t i = x.size(); i-- > 0;) t[k++] = {-x[i], w[i]};
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0.0) t[k++] = {x[i], w[i]};
    return t;
  }();
  return table;
}

template <class T>
struct Acc {
  long double re = 0.0L, im = 0.0L;
  void add(const T& v, double w) {
    if constexpr (std::is_same_v<T, cplx>) {
      re += static_cast<long double>(w) * v.real();
      im += static_cast<long double>(w) * v.imag();
    } else {
      re += static_cast<long double>(w) * v;
    }
  }
  T get() const {
    if constexpr (std::is_same_v<T, cplx>) return cplx(static_cast<double>(re), static_cast<double>(im));
    else return static_cast<T>(re);
  }
};

template <class T>
struct RingValue {
  T value{};      // integral over theta in [0, 2 pi)
  double error = 0.0;
  double mass = 0.0;  // same integral of |f|
  int angles = 0;
  std::vector<std::pair<double, double>> nodes;
};

template <class T>
struct Segment {
  T value{};
  double error = 0.0;
  double mass = 0.0;
  std::vector<std::pair<double, double>> nodes;
};

template <class T, class G>
Segment<T> gl_segment(const G& g, double a, double b, std::size_t& evals) {
  Segment<T> s;
  Acc<T> acc;
  long double mass = 0.0L;
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (const auto& [x, w] : gauss_legendre_16()) {
    const double t = mid + half * x;
    const T v = g(t);
    acc.add(v, w * half);
    mass += static_cast<long double>(w * half) * std::abs(v);
    s.nodes.emplace_back(t, w * half);
  }
  evals += gl_points;
  s.value = acc.get();
  s.mass = static_cast<double>(mass);
  return s;
}

// Gauss-Legendre bisection on [a, b] against a per-unit-length budget.
template <class T, class G>
Segment<T> adapt_segment(const G& g, double a, double b, const Segment<T>& whole, double per_unit, int depth,
                         std::size_t& evals) {
  const double m = 0.5 * (a + b);
  auto l = gl_segment<T>(g, a, m, evals);
  auto r = gl_segment<T>(g, m, b, evals);
  const double diff = std::abs(l.value + r.value - whole.value);
  if (diff <= std::max(per_unit * (b - a), 1e-14 * (l.mass + r.mass)) || depth >= 48) {
    l.value += r.value;
    l.error += r.error + diff;
    l.mass += r.mass;
    l.nodes.insert(l.nodes.end(), r.nodes.begin(), r.nodes.end());
    return l;
  }
  auto lo = adapt_segment<T>(g, a, m, l, per_unit, depth + 1, evals);
  auto hi = adapt_segment<T>(g, m, b, r, per_unit, depth + 1, evals);
  lo.value += hi.value;
  lo.error += hi.error;
  lo.mass += hi.mass;
  lo.nodes.insert(lo.nodes.end(), hi.nodes.begin(), hi.nodes.end());
  return lo;
}

// Gauss-Legendre bisection over [0, 2 pi) split at 16 equal segments plus cuts.
template <class T, class G>
RingValue<T> segmented_ring(const G& g, std::vector<double> cuts, double delta, std::size_t& evals) {
  constexpr int segments = 16;
  for (int k = 0; k <= segments; ++k) cuts.push_back(2.0 * std::numbers::pi * k / segments);
  std::sort(cuts.begin(), cuts.end());
  const double per_unit = delta / (2.0 * std::numbers::pi);
  RingValue<T> out;
  Acc<T> acc;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k], b = cuts[k + 1];
    if (b - a < 1e-12) continue;
    const auto whole = gl_segment<T>(g, a, b, evals);
    auto seg = adapt_segment<T>(g, a, b, whole, per_unit, 0, evals);
    acc.add(seg.value, 1.0);
    out.error += seg.error;
    out.mass += seg.mass;
    out.nodes.insert(out.nodes.end(), seg.nodes.begin(), seg.nodes.end());
  }
  out.value = acc.get();
  out.angles = static_cast<int>(out.nodes.size());
  return out;
}

// Trapezoid rule on one circle, doubled until two successive rules agree
// within max(delta, rounding floor). A kink close to the circle (|f|^p near a
// zero of f) stalls the doubling; unresolved rings switch to Gauss-Legendre
// bisection in theta with a cut at the angle of each nearby singular point,
// early when such a point exists.
template <class T, class F>
RingValue<T> ring_integral(const F& f, cplx center, double r, double delta, const QuadratureOptions& o,
                           std::size_t& evals) {
  const auto g = [&](double t) { return f(center + std::polar(r, t)); };
  const auto check = [&](RingValue<T> v) {
    if (v.error > std::max(delta, 1e-13 * v.mass) && !o.best_effort)
      throw NumericalError("angular refinement did not converge at r=" + to_text(r));
    return v;
  };
  std::vector<double> cuts;
  for (const cplx z : o.singular_points) {
    const cplx d = z - center;
    const double rho = std::abs(d);
    if (std::abs(rho - r) <= 0.15 * std::max(r, rho)) {
      double t = std::arg(d);
      if (t < 0.0) t += 2.0 * std::numbers::pi;
      cuts.push_back(t);
    }
  }
  const int switch_at = cuts.empty() ? o.trapezoid_switch : 2 * o.initial_angles;
  int n = o.initial_angles;
  Acc<T> sum;
  long double abs_sum = 0.0L;
  for (int j = 0; j < n; ++j) {
    const T v = f(center + std::polar(r, 2.0 * std::numbers::pi * j / n));
    sum.add(v, 1.0);
    abs_sum += std::abs(v);
  }
  evals += static_cast<std::size_t>(n);
  T coarse = sum.get() * (2.0 * std::numbers::pi / n);
  for (;;) {
    for (int j = 0; j < n; ++j) {
      const T v = f(center + std::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / n));
      sum.add(v, 1.0);
      abs_sum += std::abs(v);
    }
    evals += static_cast<std::size_t>(n);
    n *= 2;
    const T fine = sum.get() * (2.0 * std::numbers::pi / n);
    const double mass = static_cast<double>(abs_sum) * 2.0 * std::numbers::pi / n;
    const double diff = std::abs(fine - coarse);
    if (diff <= std::max(delta, 1e-14 * mass)) return {fine, diff, mass, n, {}};
    if (n >= switch_at) break;
    coarse = fine;
  }
  return check(segmented_ring<T>(g, std::move(cuts), delta, evals));
}

template <class T>
struct PanelValue {
  T value{};
  double error = 0.0;
  double mass = 0.0;
  std::vector<Ring> rings;
};

template <class T, class F>
PanelValue<T> gl_panel(const F& f, cplx center, double a, double b, double delta, const QuadratureOptions& o,
                       std::size_t& evals) {
  PanelValue<T> p;
  Acc<T> acc;
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (const auto& [x, w] : gauss_legendre_16()) {
    const double r = mid + half * x;
    const double weight = w * half * r;
    auto ring = ring_integral<T>(f, center, r, delta, o, evals);
    acc.add(ring.value, weight);
    p.error += weight * ring.error;
    p.mass += weight * ring.mass;
    p.rings.push_back({r, weight, ring.angles, std::move(ring.nodes)});
  }
  p.value = acc.get();
  return p;
}

template <class T>
PanelValue<T> merge(PanelValue<T> a, PanelValue<T> b) {
  a.value += b.value;
  a.error += b.error;
  a.mass += b.mass;
  a.rings.insert(a.rings.end(), b.rings.begin(), b.rings.end());
  return a;
}

// Accepts the two-half rule once it agrees with the whole-panel rule within
// the panel's share of the budget; otherwise bisects both halves.
template <class T, class F>
PanelValue<T> adapt_panel(const F& f, cplx center, double a, double b, const PanelValue<T>& coarse, double per_unit,
                          double delta, int depth, const QuadratureOptions& o, std::size_t& evals,
                          std::size_t& panels) {
  const double m = 0.5 * (a + b);
  auto left = gl_panel<T>(f, center, a, m, delta, o, evals);
  auto right = gl_panel<T>(f, center, m, b, delta, o, evals);
  panels += 2;
  const double diff = std::abs(left.value + right.value - coarse.value);
  const double allowed = std::max(per_unit * (b - a), 1e-13 * (left.mass + right.mass));
  if (diff <= allowed) {
    auto out = merge(std::move(left), std::move(right));
    out.error += diff;
    return out;
  }
  if ((depth >= o.max_depth || panels > o.max_panels) && o.best_effort) {
    auto out = merge(std::move(left), std::move(right));
    out.error += diff;
    return out;
  }
  if (depth >= o.max_depth || panels > o.max_panels)
    throw NumericalError("radial refinement budget exhausted on [" + to_text(a) + ", " + to_text(b) + "]");
  auto l = adapt_panel<T>(f, center, a, m, left, per_unit, delta, depth + 1, o, evals, panels);
  auto r = adapt_panel<T>(f, center, m, b, right, per_unit, delta, depth + 1, o, evals, panels);
  return merge(std::move(l), std::move(r));
}

inline std::vector<double> panel_edges(double outer, double width, const std::vector<double>& breaks) {
  std::vector<double> edges;
  const int n = std::max(1, static_cast<int>(std::ceil(outer / width - 1e-9)));
  for (int i = 0; i <= n; ++i) edges.push_back(outer * i / n);
  for (double b : breaks)
    if (b > 1e-9 * outer && b < outer * (1.0 - 1e-9)) edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  std::vector<double> out;
  for (double e : edges)
    if (out.empty() || e - out.back() > 1e-9 * outer) out.push_back(e);
  out.back() = outer;
  return out;
}

// Adaptive integral over the disk |v| <= outer around center, with absolute
// in-disk error budget tol (half radial, a small share angular).
template <class T, class F>
QuadratureResult<T> adaptive_polar(const F& f, cplx center, double outer, double tol, const QuadratureOptions& o) {
  auto breaks = o.breakpoints;
  for (const cplx z : o.singular_points) breaks.push_back(std::abs(z - center));
  const auto edges = panel_edges(outer, o.panel_width, breaks);
  const std::size_t n = edges.size() - 1;
  const double per_unit = 0.5 * tol / outer;
  const double delta = tol / (8.0 * outer * outer);
  std::vector<PanelValue<T>> parts(n);
  std::vector<std::size_t> evals(n, 0), panels(n, 0);
  parallel_for(n, [&](std::size_t i) {
    const auto coarse = gl_panel<T>(f, center, edges[i], edges[i + 1], delta, o, evals[i]);
    parts[i] = adapt_panel<T>(f, center, edges[i], edges[i + 1], coarse, per_unit, delta, 0, o, evals[i], panels[i]);
  });
  QuadratureResult<T> out;
  out.rule.center = center;
  out.rule.outer_radius = outer;
  Acc<T> acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc.add(parts[i].value, 1.0);
    out.error += parts[i].error;
    out.evaluations += evals[i];
    out.rule.rings.insert(out.rule.rings.end(), parts[i].rings.begin(), parts[i].rings.end());
  }
  out.value = acc.get();
  return out;
}

// Integral of |f| over the annulus [r0, r1] with a fixed coarse rule.
template <class F>
double annulus_mass(const F& f, cplx center, double r0, double r1) {
  double total = 0.0;
  constexpr int panels = 2, angles = 64;
  for (int p = 0; p < panels; ++p) {
    const double a = r0 + (r1 - r0) * p / panels, b = r0 + (r1 - r0) * (p + 1) / panels;
    for (const auto& [x, w] : gauss_legendre_16()) {
      const double r = 0.5 * (a + b) + 0.5 * (b - a) * x;
      double ring = 0.0;
      for (int j = 0; j < angles; ++j) ring += std::abs(f(center + std::polar(r, 2.0 * std::numbers::pi * j / angles)));
      total += w * 0.5 * (b - a) * r * ring * 2.0 * std::numbers::pi / angles;
    }
  }
  return total;
}

}  // namespace detail

// Integral of f over C (f evaluated at absolute points; the decay bound is in
// |z - opts.center|). Returns |true - value| <= error with error <= tol, where
// the truncation radius meets the closed-form tail rule tail <= tol/10 and the
// in-disk part is resolved adaptively to tol/2.
template <class F>
auto integrate_plane(const F& f, const DecayBound& bound, double tol, const QuadratureOptions& opts = {}) {
  using T = std::decay_t<std::invoke_result_t<const F&, cplx>>;
  if (!(tol > 0.0)) throw InputError("quadrature tolerance must be positive");
  double radius = std::max(opts.min_radius, tail_radius(bound, tol / 10.0));
  double tail = tail_bound(bound, radius);
  for (int attempt = 0;; ++attempt) {
    if (detail::annulus_mass(f, opts.center, radius, 2.0 * radius) <= tol / 10.0) break;
    if (attempt == 8) throw NumericalError("tail check failed: integrand mass beyond R=" + to_text(radius));
    radius *= 1.25;
    tail = tail_bound(bound, radius);
  }
  auto out = detail::adaptive_polar<T>(f, opts.center, radius, tol / 2.0, opts);
  out.tail_bound = tail;
  out.error += tail;
  return out;
}

template <class F>
auto integrate_plane(const F& f, const DecayBound& bound, double tol, cplx center) {
  QuadratureOptions o;
  o.center = center;
  return integrate_plane(f, bound, tol, o);
}

// Integral of f over the closed disk B(center, radius).
template <class F>
auto integrate_disk(const F& f, cplx center, double radius, double tol, QuadratureOptions opts = {}) {
  using T = std::decay_t<std::invoke_result_t<const F&, cplx>>;
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("disk radius must be positive");
  if (!(tol > 0.0)) throw InputError("quadrature tolerance must be positive");
  opts.panel_width = std::min(opts.panel_width, radius / 2.0);
  return detail::adaptive_polar<T>(f, center, radius, tol, opts);
}

}  // namespace fockvar
