#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockvar/error.hpp"
#include "fockvar/exponents.hpp"
#include "fockvar/functions.hpp"
#include "fockvar/quadrature.hpp"
#include "fockvar/report.hpp"

namespace fockvar {

struct ModularReport {
  double value = 0.0;
  double quadrature_error = 0.0;
  // Norm solves only.
  std::optional<std::pair<double, double>> lambda_bracket;
  int iterations = 0;
  std::optional<double> residual;
  std::optional<double> modular_at_value;
  // Bound on |value - exact| for norm solves (bracket plus modular error).
  double value_error = 0.0;
  // Triple norm only: the Luxemburg norm of f and the upper bound (4/pi)||f||.
  std::optional<double> luxemburg;
  std::optional<double> upper_bound;
};

// Tail envelope of (|f|/lambda)^{p(z)} e^{-p(z)|z|^2}. Evaluands may provide a
// sharper one through modular_decay(p, lambda).
template <Evaluand F>
DecayBound modular_decay(const F& f, const VariableExponent& p, double lambda) {
  if constexpr (requires { { f.modular_decay(p, lambda) } -> std::same_as<DecayBound>; }) {
    return f.modular_decay(p, lambda);
  } else {
    return gaussian_decay(power_bound(scaled(f.growth(), 1.0 / lambda), p.p_plus()), p.p_minus());
  }
}

// The normalized modular and Luxemburg norm for one exponent. Caches the
// gauge constant; immutable and shareable after construction.
class FockModular {
 public:
  // tol is the target for modular values and norm brackets; quadrature runs
  // a factor 10 tighter so the norm residual check has room.
  FockModular(VariableExponent p, double tol) : p_(std::move(p)), tol_(tol) {
    if (!(tol > 0.0)) throw InputError("tolerance must be positive");
    options_.breakpoints = p_.radial_breakpoints();
    // |f|^{p} is only finitely smooth at zeros of f.
    options_.best_effort = true;
    // C >= pi/p_plus, so this keeps the relative gauge error below tol/40.
    const double gauge_tol = tol_ / 40.0 * std::numbers::pi / p_.p_plus();
    const auto r = integrate_plane([this](cplx z) { return std::exp(-std::norm(z) * p_(z)); },
                                   DecayBound{1.0, 0, p_.p_minus()}, gauge_tol, options_);
    gauge_ = r.value;
    gauge_error_ = r.error;
  }

  const VariableExponent& exponent() const { return p_; }
  double tolerance() const { return tol_; }
  double gauge() const { return gauge_; }
  double gauge_error() const { return gauge_error_; }

  // rho(f / lambda) with error combining both quadratures.
  template <Evaluand F>
  ModularReport modular(const F& f, double lambda = 1.0) const {
    return modular_at(f, lambda, tol_ / 10.0);
  }

  template <Evaluand F>
  ModularReport norm(const F& f) const {
    ModularReport out;
    if (vanishes(f)) return out;
    const double pm = p_.p_minus(), pp = p_.p_plus();
    // The first node set is built at lambda = 1 and also supplies rho(f).
    NodeSet nodes = build_nodes(f, 1.0, 0.0);
    const double rho1 = nodes.rho(1.0);
    if (!(rho1 > 0.0) || !std::isfinite(rho1)) throw NumericalError("modular of f is not a positive finite number");
    // rho(f/l) lies between rho(f) l^{-p+} and rho(f) l^{-p-}.
    double lo = std::min(std::pow(rho1, 1.0 / pm), std::pow(rho1, 1.0 / pp)) * (1.0 - 1e-6);
    double hi = std::max(std::pow(rho1, 1.0 / pm), std::pow(rho1, 1.0 / pp)) * (1.0 + 1e-6);
    nodes.prune(lo);
    for (int round = 0; round < 4; ++round) {
      if (round > 0) nodes = build_nodes(f, std::sqrt(lo * hi), lo);
      expand_bracket(nodes, lo, hi);
      double lambda = 0.5 * (lo + hi), resid = 0.0;
      for (int it = 0; it < 400; ++it) {
        lambda = 0.5 * (lo + hi);
        resid = nodes.rho(lambda) - 1.0;
        ++out.iterations;
        (resid > 0.0 ? lo : hi) = lambda;
        if (hi - lo <= tol_ && std::abs(resid) <= tol_ / 10.0) break;
      }
      // Fresh adaptive modular at the root as an independent check.
      const auto check = modular_at(f, lambda, tol_ / 10.0);
      const double residual = std::abs(check.value - 1.0);
      if (residual <= tol_) {
        out.value = lambda;
        out.lambda_bracket = std::pair{lo, hi};
        out.residual = residual;
        out.modular_at_value = check.value;
        out.quadrature_error = check.quadrature_error;
        out.value_error = (hi - lo) + lambda * (residual + check.quadrature_error) / pm;
        return out;
      }
      const double delta = std::min(0.5, 10.0 * residual / pm);
      lo = lambda * (1.0 - delta);
      hi = lambda * (1.0 + delta);
    }
    throw NumericalError("Luxemburg solve did not reach residual " + to_text(tol_));
  }

 private:
  // Nodes of a fixed rule with per-node log|f|, p and log(weight e^{-p r^2}/C),
  // so rho(f/lambda) is one pass of exponentials.
  struct NodeSet {
    std::vector<double> log_f, p, log_w;
    // Drops nodes that stay below e^{-69} for every lambda >= lambda_min.
    void prune(double lambda_min) {
      const double lmin = std::log(lambda_min);
      std::size_t n = 0;
      for (std::size_t k = 0; k < p.size(); ++k)
        if (log_w[k] + p[k] * (log_f[k] - lmin) >= -69.0) {
          log_f[n] = log_f[k], p[n] = p[k], log_w[n] = log_w[k];
          ++n;
        }
      log_f.resize(n), p.resize(n), log_w.resize(n);
    }
    double rho(double lambda) const {
      const double ll = std::log(lambda);
      long double s = 0.0L;
      for (std::size_t k = 0; k < p.size(); ++k) s += std::exp(log_w[k] + p[k] * (log_f[k] - ll));
      return static_cast<double>(s);
    }
  };

  template <Evaluand F>
  ModularReport modular_at(const F& f, double lambda, double tol) const {
    ModularReport out;
    if (vanishes(f)) return out;
    const auto r = integral(f, lambda, tol * gauge_ / 2.0);
    out.value = r.value / gauge_;
    out.quadrature_error = r.error / gauge_ + out.value * gauge_error_ / gauge_;
    return out;
  }

  template <Evaluand F>
  QuadratureResult<double> integral(const F& f, double lambda, double tol) const {
    const double ll = std::log(lambda);
    const auto decay = modular_decay(f, p_, lambda);
    QuadratureOptions o = options_;
    o.singular_points = singular_points(f, tail_radius(decay, tol / 10.0));
    return integrate_plane(
        [&](cplx z) {
          const double a = std::abs(cplx(f(z)));
          if (a == 0.0) return 0.0;
          return std::exp(p_(z) * (std::log(a) - ll - std::norm(z)));
        },
        decay, tol, o);
  }

  // Rule built adaptively at lambda0, pruned for lambda >= lambda_min (no
  // pruning when lambda_min is 0).
  template <Evaluand F>
  NodeSet build_nodes(const F& f, double lambda0, double lambda_min) const {
    const auto r = integral(f, lambda0, tol_ / 20.0 * gauge_);
    NodeSet s;
    const double lc = std::log(gauge_);
    r.for_each_node([&](cplx z, double w) {
      const double a = std::abs(cplx(f(z)));
      if (a == 0.0) return;
      const double pk = p_(z), lf = std::log(a);
      const double lw = std::log(w) - pk * std::norm(z) - lc;
      s.log_f.push_back(lf);
      s.p.push_back(pk);
      s.log_w.push_back(lw);
    });
    if (lambda_min > 0.0) s.prune(lambda_min);
    return s;
  }

  static void expand_bracket(const NodeSet& nodes, double& lo, double& hi) {
    while (nodes.rho(lo) < 1.0) {
      lo /= 2.0;
      if (lo < 1e-12) throw NumericalError("norm bracket not found above 1e-12");
    }
    while (nodes.rho(hi) > 1.0) {
      hi *= 2.0;
      if (hi > 1e12) throw NumericalError("norm bracket not found below 1e12");
    }
  }

  VariableExponent p_;
  double tol_;
  QuadratureOptions options_;
  double gauge_ = 0.0;
  double gauge_error_ = 0.0;
};

inline double gauge_constant(const VariableExponent& p, double tol) { return FockModular(p, tol).gauge(); }

template <Evaluand F>
ModularReport modular(const F& f, const VariableExponent& p, double tol) {
  return FockModular(p, tol).modular(f);
}

template <Evaluand F>
ModularReport luxemburg_norm(const F& f, const VariableExponent& p, double tol) {
  return FockModular(p, tol).norm(f);
}

// <f, g> = (2/pi) int f conj(g) e^{-2|z|^2} dA.
template <Evaluand F, Evaluand G>
Estimate<cplx> pairing(const F& f, const G& g, double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (vanishes(f) || vanishes(g)) return {};
  const auto r = integrate_plane([&](cplx z) { return cplx(f(z)) * std::conj(cplx(g(z))) * std::exp(-2.0 * std::norm(z)); },
                                 gaussian_decay(f.growth() * g.growth(), 2.0), tol * std::numbers::pi / 2.0);
  return {r.value * (2.0 / std::numbers::pi), r.error * (2.0 / std::numbers::pi)};
}

// |int f conj(g) e^{-2|z|^2} dA| <= 2 ||f||_{p} ||g||_{p'}.
template <Evaluand F, Evaluand G>
VerificationReport holder_margin(const F& f, const G& g, const FockModular& space, const FockModular& dual, double tol) {
  const auto nf = space.norm(f);
  const auto ng = dual.norm(g);
  const auto pr = pairing(f, g, tol);
  const double half_pi = std::numbers::pi / 2.0;
  const double lhs = std::abs(pr.value) * half_pi;
  const double rhs = 2.0 * nf.value * ng.value;
  const double err = pr.error * half_pi + 2.0 * (nf.value_error * ng.value + nf.value * ng.value_error);
  VerificationReport rep{"holder_inequality", "Holder inequality with constant 2", {}, std::nullopt, {}};
  auto c = bound_case(space.exponent().describe(), lhs, rhs, tol + err);
  c.extras = {{"norm_f", nf.value}, {"norm_g", ng.value}};
  rep.cases.push_back(std::move(c));
  return rep;
}

template <Evaluand F, Evaluand G>
VerificationReport holder_margin(const F& f, const G& g, const VariableExponent& p, double tol) {
  return holder_margin(f, g, FockModular(p, tol), FockModular(conjugate(p), tol), tol);
}

// The pairing maximizer over the unit modular ball of the conjugate space.
// With v = |f| e^{-|z|^2}, maximizing int v u dA subject to
// int u^{p'} dA = C_{p'} gives u = (kappa v / p')^{p-1}, so
// g = sgn(f) e^{|z|^2} (kappa v / p')^{p-1} with kappa fixed by rho_{p'}(g) = 1.
template <Evaluand F>
class ExtremalWitness {
 public:
  ExtremalWitness(const F& f, VariableExponent p, double kappa) : f_(f), p_(std::move(p)), kappa_(kappa) {}

  cplx operator()(cplx z) const {
    const cplx v = f_(z);
    const double a = std::abs(v);
    if (a == 0.0) return {0.0, 0.0};
    const double pz = p_(z), r2 = std::norm(z);
    const double dual = pz / (pz - 1.0);
    return v / a * std::exp(r2 + (pz - 1.0) * (std::log(kappa_ * a / dual) - r2));
  }

  // |g| <= max(1, kappa)^{p+ - 1} max(1, |f|)^{p+ - 1} e^{(2 - p-)|z|^2}.
  GrowthBound growth() const {
    const auto g = f_.growth();
    const double e = p_.p_plus() - 1.0;
    return {std::pow(std::max(1.0, kappa_) * std::max(1.0, g.scale), e), g.degree * e, std::max(0.0, g.linear) * e,
            2.0 - p_.p_minus()};
  }

  // |g|^{p'} e^{-p'|z|^2} <= (kappa |f|)^p e^{-p|z|^2}.
  DecayBound modular_decay(const VariableExponent& dual, double lambda) const {
    const double c = std::pow(std::max(1.0, 1.0 / lambda), dual.p_plus());
    return scaled_decay(fockvar::modular_decay(f_, p_, 1.0 / std::max(1.0, kappa_)), c);
  }

  std::vector<cplx> zeros(double radius) const { return singular_points(f_, radius); }

  double kappa() const { return kappa_; }

 private:
  static DecayBound scaled_decay(DecayBound d, double c) {
    d.scale *= c;
    return d;
  }

  const F& f_;
  VariableExponent p_;
  double kappa_;
};

// The dual-pairing norm sup |<f, g>| over rho_{p'}(g) <= 1, attained by the
// extremal witness. f is normalized to unit Luxemburg norm first; kappa is
// solved on a fixed rule and then checked with a fresh adaptive modular.
template <Evaluand F>
ModularReport triple_norm(const F& f, const FockModular& space, const FockModular& dual, double tol) {
  ModularReport out;
  const auto nf = space.norm(f);
  out.luxemburg = nf.value;
  out.upper_bound = 4.0 / std::numbers::pi * nf.value;
  if (nf.value == 0.0) return out;
  const double inv = 1.0 / nf.value;
  const auto unit = [&f, inv](cplx z) { return cplx(f(z)) * inv; };
  struct Unit {
    const decltype(unit)& fn;
    const F& base;
    GrowthBound g;
    cplx operator()(cplx z) const { return fn(z); }
    GrowthBound growth() const { return g; }
    std::vector<cplx> zeros(double radius) const { return singular_points(base, radius); }
  } fhat{unit, f, scaled(f.growth(), inv)};
  const auto& p = space.exponent();
  const double pm = p.p_minus(), pp = p.p_plus();

  // rho_{p'}(g_kappa) = C_{p'}^{-1} int (kappa v / p')^p dA; per node keep
  // log(v / p'), p and log(weight / C_{p'}).
  const auto rule_at = [&](double kappa, double qtol) {
    QuadratureOptions o;
    o.breakpoints = p.radial_breakpoints();
    o.best_effort = true;
    const auto decay = modular_decay(fhat, p, 1.0 / std::max(1.0, kappa));
    o.singular_points = singular_points(fhat, tail_radius(decay, qtol / 10.0));
    const double lk = std::log(kappa);
    return integrate_plane(
        [&](cplx z) {
          const double a = std::abs(fhat(z));
          if (a == 0.0) return 0.0;
          const double pz = p(z);
          return std::exp(pz * (lk + std::log(a) - std::norm(z) - std::log(pz / (pz - 1.0))));
        },
        decay, qtol, o);
  };
  const double cd = dual.gauge();
  const double phi1 = rule_at(1.0, tol / 10.0 * cd).value / cd;
  if (!(phi1 > 0.0) || !std::isfinite(phi1)) throw NumericalError("witness modular is not a positive finite number");
  double lo = std::min(std::pow(phi1, -1.0 / pm), std::pow(phi1, -1.0 / pp)) * (1.0 - 1e-6);
  double hi = std::max(std::pow(phi1, -1.0 / pm), std::pow(phi1, -1.0 / pp)) * (1.0 + 1e-6);
  std::vector<double> lv, pv, lw;
  rule_at(std::sqrt(lo * hi), tol / 20.0 * cd).for_each_node([&](cplx z, double w) {
    const double a = std::abs(fhat(z));
    if (a == 0.0) return;
    const double pz = p(z);
    lv.push_back(std::log(a) - std::norm(z) - std::log(pz / (pz - 1.0)));
    pv.push_back(pz);
    lw.push_back(std::log(w) - std::log(cd));
  });
  const auto phi = [&](double kappa) {
    const double lk = std::log(kappa);
    long double s = 0.0L;
    for (std::size_t k = 0; k < pv.size(); ++k) s += std::exp(lw[k] + pv[k] * (lk + lv[k]));
    return static_cast<double>(s);
  };
  while (phi(lo) > 1.0 && lo > 1e-12) lo /= 2.0;
  while (phi(hi) < 1.0 && hi < 1e12) hi *= 2.0;
  double kappa = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    kappa = 0.5 * (lo + hi);
    (phi(kappa) < 1.0 ? lo : hi) = kappa;
    ++out.iterations;
  }
  const ExtremalWitness<Unit> witness(fhat, p, kappa);
  const auto check = dual.modular(witness);
  const auto pr = pairing(fhat, witness, tol);
  // Rescaling g to exact unit modular moves the pairing by at most a factor
  // (1 +- residual)^{1/p'-}.
  const double residual = std::abs(check.value - 1.0) + check.quadrature_error;
  const double dual_minus = pp / (pp - 1.0);
  out.value = nf.value * std::abs(pr.value);
  out.lambda_bracket = std::pair{lo, hi};
  out.residual = std::abs(check.value - 1.0);
  out.modular_at_value = check.value;
  out.quadrature_error = pr.error + check.quadrature_error;
  out.value_error = out.value * (pr.error / std::max(std::abs(pr.value), 1e-300) + 2.0 * residual / dual_minus +
                                 nf.value_error / nf.value);
  return out;
}

template <Evaluand F>
ModularReport triple_norm(const F& f, const VariableExponent& p, double tol) {
  return triple_norm(f, FockModular(p, tol), FockModular(conjugate(p), tol), tol);
}

// Raw modular int |g(z)|^{p(z)} dA with no weight. g must decay like a
// Gaussian: growth().quadratic < 0.
template <Evaluand G>
Estimate<double> unweighted_modular(const G& g, const VariableExponent& p, double tol) {
  const auto b = g.growth();
  if (!(b.quadratic < 0.0)) throw InputError("unweighted modular needs a Gaussian-decaying integrand");
  const double pm = p.p_minus();
  // Beyond r0 the envelope is <= 1, so |g|^p <= envelope^{p-}.
  double r0 = 1.0;
  while (b.at(r0) > 1.0) r0 *= 1.5;
  const GrowthBound env{std::pow(b.scale, pm), b.degree * pm, b.linear * pm, 0.0};
  QuadratureOptions o;
  o.min_radius = r0;
  o.best_effort = true;
  o.breakpoints = p.radial_breakpoints();
  const auto decay = gaussian_decay(env, -b.quadratic * pm);
  o.singular_points = singular_points(g, std::max(r0, tail_radius(decay, tol / 10.0)));
  const auto r = integrate_plane(
      [&](cplx z) {
        const double a = std::abs(cplx(g(z)));
        return a == 0.0 ? 0.0 : std::exp(p(z) * std::log(a));
      },
      decay, tol, o);
  return {r.value, r.error};
}

}  // namespace fockvar
