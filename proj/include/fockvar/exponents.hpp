#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fockvar/error.hpp"
#include "fockvar/expression.hpp"
#include "fockvar/report.hpp"

namespace fockvar {

using cplx = std::complex<double>;

class VariableExponent;
inline VariableExponent conjugate(const VariableExponent& p);

struct ExponentValue {
  double value;
  bool clamped;  // raw value left [p_minus, p_plus] by more than 1e-12
};

// Points used to spot-check declared bounds and pointwise orderings: a polar
// grid out to |z| = 8 plus a few far rings.
inline std::vector<cplx> reference_points() {
  std::vector<cplx> pts{cplx{0.0, 0.0}};
  std::vector<double> radii;
  for (int k = 1; k <= 32; ++k) radii.push_back(0.25 * k);
  for (double r : {10.0, 20.0, 50.0, 100.0, 1000.0}) radii.push_back(r);
  constexpr int angles = 16;
  for (double r : radii)
    for (int j = 0; j < angles; ++j) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * (j + 0.25) / angles));
  return pts;
}

// A variable exponent p: C -> [1, inf) with declared bounds
// 1 <= p_minus <= p(z) <= p_plus < inf and an optional decay target p_inf.
// Immutable; copies share any underlying expression or primal exponent.
class VariableExponent {
 public:
  struct Constant {
    double value;
  };
  // p(z) = base + amplitude / log(e + |z|)
  struct LogDecay {
    double base, amplitude;
  };
  // p(z) = base + amplitude * max(0, 1 - |z| / radius)
  struct RadialBump {
    double base, amplitude, radius;
  };
  struct Expression {
    std::shared_ptr<const ExponentExpression> expr;
  };
  // Library-level hook for exponents outside the shipped families, such as
  // discontinuous test exponents. Not reachable from JSON input.
  struct Custom {
    std::string name;
    std::function<double(cplx)> fn;
  };
  // p'(z) = p(z) / (p(z) - 1)
  struct Conjugate {
    std::shared_ptr<const VariableExponent> primal;
  };
  using Kind = std::variant<Constant, LogDecay, RadialBump, Expression, Custom, Conjugate>;

  static VariableExponent constant(double value) {
    if (!std::isfinite(value) || value < 1.0) throw InputError("constant exponent must be finite and >= 1");
    return VariableExponent(Constant{value}, value, value, value);
  }

  static VariableExponent log_decay(double base, double amplitude) {
    const double lo = std::min(base, base + amplitude), hi = std::max(base, base + amplitude);
    check_band(lo, hi);
    return VariableExponent(LogDecay{base, amplitude}, lo, hi, base);
  }

  static VariableExponent radial_bump(double base, double amplitude, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("radial bump radius must be positive");
    const double lo = std::min(base, base + amplitude), hi = std::max(base, base + amplitude);
    check_band(lo, hi);
    return VariableExponent(RadialBump{base, amplitude, radius}, lo, hi, base);
  }

  static VariableExponent expression(ExponentExpression expr, double p_minus, double p_plus,
                                     std::optional<double> p_inf = std::nullopt) {
    check_band(p_minus, p_plus);
    VariableExponent p(Expression{std::make_shared<const ExponentExpression>(std::move(expr))}, p_minus, p_plus,
                       p_inf);
    p.spot_check();
    return p;
  }

  static VariableExponent expression(std::string_view source, double p_minus, double p_plus,
                                     std::optional<double> p_inf = std::nullopt) {
    return expression(ExponentExpression::parse(source), p_minus, p_plus, p_inf);
  }

  static VariableExponent custom(std::string name, std::function<double(cplx)> fn, double p_minus, double p_plus,
                                 std::optional<double> p_inf = std::nullopt) {
    check_band(p_minus, p_plus);
    VariableExponent p(Custom{std::move(name), std::move(fn)}, p_minus, p_plus, p_inf);
    p.spot_check();
    return p;
  }

  ExponentValue evaluate(cplx z) const {
    const double raw = raw_value(z);
    const bool outside = raw < p_minus_ - 1e-12 || raw > p_plus_ + 1e-12;
    return {std::clamp(raw, p_minus_, p_plus_), outside};
  }

  double operator()(cplx z) const { return std::clamp(raw_value(z), p_minus_, p_plus_); }

  double p_minus() const { return p_minus_; }
  double p_plus() const { return p_plus_; }
  std::optional<double> p_infinity() const { return p_inf_; }
  const Kind& kind() const { return kind_; }
  bool is_constant() const { return p_minus_ == p_plus_; }

  // Radii where p is not smooth in |z|; quadrature places panel edges there.
  std::vector<double> radial_breakpoints() const {
    if (const auto* b = std::get_if<RadialBump>(&kind_)) return {b->radius};
    if (const auto* c = std::get_if<Conjugate>(&kind_)) return c->primal->radial_breakpoints();
    return {};
  }

  std::string describe() const {
    return std::visit(
        [](const auto& k) -> std::string {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Constant>) return "const(" + to_text(k.value) + ")";
          else if constexpr (std::is_same_v<K, LogDecay>)
            return "log_decay(" + to_text(k.base) + "," + to_text(k.amplitude) + ")";
          else if constexpr (std::is_same_v<K, RadialBump>)
            return "radial_bump(" + to_text(k.base) + "," + to_text(k.amplitude) + "," + to_text(k.radius) + ")";
          else if constexpr (std::is_same_v<K, Expression>) return "expr(" + k.expr->source() + ")";
          else if constexpr (std::is_same_v<K, Custom>) return "custom(" + k.name + ")";
          else return "conjugate(" + k.primal->describe() + ")";
        },
        kind_);
  }

 private:
  friend VariableExponent conjugate(const VariableExponent& p);

  VariableExponent(Kind kind, double lo, double hi, std::optional<double> inf)
      : kind_(std::move(kind)), p_minus_(lo), p_plus_(hi), p_inf_(inf) {
    if (p_inf_ && (!std::isfinite(*p_inf_) || *p_inf_ < 1.0)) throw InputError("p_inf must lie in [1, inf)");
  }

  static void check_band(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw InputError("exponent bounds must be finite");
    if (lo < 1.0) throw InputError("exponent lower bound must be >= 1");
    if (hi < lo) throw InputError("exponent upper bound below lower bound");
  }

  double raw_value(cplx z) const {
    return std::visit(
        [z](const auto& k) -> double {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Constant>) return k.value;
          else if constexpr (std::is_same_v<K, LogDecay>)
            return k.base + k.amplitude / std::log(std::numbers::e + std::abs(z));
          else if constexpr (std::is_same_v<K, RadialBump>)
            return k.base + k.amplitude * std::max(0.0, 1.0 - std::abs(z) / k.radius);
          else if constexpr (std::is_same_v<K, Expression>) return (*k.expr)(z);
          else if constexpr (std::is_same_v<K, Custom>) return k.fn(z);
          else {
            const double q = (*k.primal)(z);
            return q / (q - 1.0);
          }
        },
        kind_);
  }

  void spot_check() const {
    for (const cplx z : reference_points()) {
      double raw = 0.0;
      try {
        raw = raw_value(z);
      } catch (const EvaluationError& e) {
        throw InputError(std::string("exponent fails on the reference grid: ") + e.what());
      }
      if (raw < p_minus_ - 1e-12 || raw > p_plus_ + 1e-12)
        throw InputError("exponent " + describe() + " leaves its declared band [" + to_text(p_minus_) + ", " +
                         to_text(p_plus_) + "] at z=" + to_text(z));
    }
  }

  Kind kind_;
  double p_minus_;
  double p_plus_;
  std::optional<double> p_inf_;
};

inline ExponentValue evaluate_exponent(const VariableExponent& p, cplx z) { return p.evaluate(z); }

// Pointwise conjugate p' = p/(p-1). Requires p_minus > 1.
inline VariableExponent conjugate(const VariableExponent& p) {
  if (!(p.p_minus() > 1.0)) throw InputError("conjugate exponent needs p_minus > 1 (got " + to_text(p.p_minus()) + ")");
  if (const auto* c = std::get_if<VariableExponent::Conjugate>(&p.kind())) return *c->primal;
  auto dual = [](double q) { return q / (q - 1.0); };
  if (const auto* c = std::get_if<VariableExponent::Constant>(&p.kind())) return VariableExponent::constant(dual(c->value));
  std::optional<double> inf;
  if (p.p_infinity() && *p.p_infinity() > 1.0) inf = dual(*p.p_infinity());
  return VariableExponent(VariableExponent::Conjugate{std::make_shared<const VariableExponent>(p)}, dual(p.p_plus()),
                          dual(p.p_minus()), inf);
}

namespace detail {

// Oscillation max - min of p over an n x n tensor grid clipped to the disk.
inline double grid_oscillation(const VariableExponent& p, cplx center, double radius, int n) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < n; ++i) {
    const double x = -radius + 2.0 * radius * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y = -radius + 2.0 * radius * j / (n - 1);
      if (x * x + y * y > radius * radius * (1.0 + 1e-12)) continue;
      const double v = p(center + cplx{x, y});
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return hi - lo;
}

}  // namespace detail

// Local log-Holder regularity in ball form: for each ball B the quantity
// |B|^(p_-(B) - p_+(B)), with ess inf/sup taken over a 33x33 grid (129x129
// when the 17x17 and 33x33 grids disagree by more than 1e-3). The report's
// measured value is the supremum over balls.
inline VerificationReport check_log_holder_local(const VariableExponent& p, std::span<const double> ball_radii,
                                                 std::span<const cplx> centers) {
  if (ball_radii.empty() || centers.empty()) throw InputError("local log-Holder check needs at least one ball");
  for (double r : ball_radii)
    if (!(r > 0.0 && r <= 0.5)) throw InputError("ball radii must lie in (0, 1/2]");
  VerificationReport report{"log_holder_local", "local log-Holder continuity, ball form", {}, 0.0, {}};
  double sup = 0.0;
  for (double r : ball_radii) {
    for (const cplx c : centers) {
      double osc = detail::grid_oscillation(p, c, r, 33);
      const double coarse = detail::grid_oscillation(p, c, r, 17);
      if (std::abs(osc - coarse) > 1e-3) osc = detail::grid_oscillation(p, c, r, 129);
      const double area = std::numbers::pi * r * r;
      const double value = std::pow(area, -osc);
      auto rec = measurement("p=" + p.describe() + ";center=" + to_text(c) + ";r=" + to_text(r), value);
      rec.extras.emplace_back("oscillation", osc);
      report.cases.push_back(std::move(rec));
      sup = std::max(sup, value);
    }
  }
  report.measured = sup;
  return report;
}

// Decay regularity: sup over samples of |p(z) - p_inf| * log(e + |z|), the
// smallest admissible decay constant. Each radius is sampled at 16 angles.
inline VerificationReport check_log_holder_decay(const VariableExponent& p, std::span<const double> sample_radii) {
  if (!p.p_infinity()) throw InputError("decay check needs a declared p_inf");
  if (sample_radii.empty()) throw InputError("decay check needs at least one sample radius");
  const double p_inf = *p.p_infinity();
  VerificationReport report{"log_holder_decay", "log-Holder decay toward p_inf", {}, 0.0, {}};
  double sup = 0.0;
  for (double r : sample_radii) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw InputError("sample radii must be finite and non-negative");
    double worst = 0.0;
    for (int j = 0; j < 16; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / 16.0);
      worst = std::max(worst, std::abs(p(z) - p_inf) * std::log(std::numbers::e + std::abs(z)));
    }
    report.cases.push_back(measurement("p=" + p.describe() + ";r=" + to_text(r), worst));
    sup = std::max(sup, worst);
  }
  report.measured = sup;
  return report;
}

}  // namespace fockvar
