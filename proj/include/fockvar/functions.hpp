#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockvar/error.hpp"
#include "fockvar/quadrature.hpp"
#include "fockvar/report.hpp"

namespace fockvar {

// c * K_a with K_a(w) = exp(2 w conj(a)).
struct KernelTerm {
  cplx coefficient;
  cplx center;
};

// sum_k c_k z^k + sum_i c_i K_{a_i}. Stored normalized: no trailing zero
// polynomial coefficients, kernel centers distinct (exact comparison), no
// zero kernel coefficients.
class EntireFunction {
 public:
  EntireFunction() = default;

  EntireFunction(std::vector<cplx> poly, std::vector<KernelTerm> kernels) {
    poly_ = std::move(poly);
    for (const auto& t : kernels) add_kernel(t);
    normalize();
  }

  static EntireFunction constant(cplx c) { return EntireFunction({c}, {}); }

  // Horner for the polynomial part plus the kernel sum.
  cplx operator()(cplx z) const {
    cplx v{0.0, 0.0};
    for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) v = v * z + *it;
    for (const auto& t : kernels_) {
      const cplx e = 2.0 * z * std::conj(t.center);
      if (e.real() > 709.0) throw NumericalError("kernel term overflows at z=" + to_text(z));
      v += t.coefficient * std::exp(e);
    }
    return v;
  }

  cplx derivative(cplx z) const {
    cplx v{0.0, 0.0};
    for (std::size_t k = poly_.size(); k-- > 1;) v = v * z + static_cast<double>(k) * poly_[k];
    for (const auto& t : kernels_) {
      const cplx e = 2.0 * z * std::conj(t.center);
      if (e.real() > 709.0) throw NumericalError("kernel term overflows at z=" + to_text(z));
      v += t.coefficient * 2.0 * std::conj(t.center) * std::exp(e);
    }
    return v;
  }

  // Zeros in |z| <= radius found by Newton iteration from a seed grid of
  // spacing 1/2. Not guaranteed complete; callers only use them as hints.
  std::vector<cplx> zeros(double radius) const {
    std::vector<cplx> out;
    if (is_zero() || (kernels_.empty() && poly_.size() < 2)) return out;
    const int n = static_cast<int>(std::ceil(radius / 0.5));
    for (int i = -n; i <= n; ++i)
      for (int j = -n; j <= n; ++j) {
        cplx z(0.5 * i, 0.5 * j);
        if (std::abs(z) > radius + 0.5) continue;
        bool converged = false;
        for (int it = 0; it < 60 && !converged; ++it) {
          const cplx d = derivative(z);
          if (d == cplx{0.0, 0.0}) break;
          const cplx step = (*this)(z) / d;
          z -= step;
          if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 2.0 * radius + 1.0) break;
          converged = std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z));
        }
        if (!converged || std::abs(z) > radius) continue;
        const double scale = std::max(1.0, growth().at(std::abs(z)));
        if (std::abs((*this)(z)) > 1e-10 * scale) continue;
        if (std::none_of(out.begin(), out.end(), [&](cplx w) { return std::abs(w - z) < 1e-8; })) out.push_back(z);
      }
    return out;
  }

  const std::vector<cplx>& poly() const { return poly_; }
  const std::vector<KernelTerm>& kernels() const { return kernels_; }
  bool is_zero() const { return poly_.empty() && kernels_.empty(); }
  int degree() const { return static_cast<int>(poly_.size()) - 1; }

  double max_center() const {
    double a = 0.0;
    for (const auto& t : kernels_) a = std::max(a, std::abs(t.center));
    return a;
  }

  // |f(z)| <= (sum |c_k| + sum |c_i|) max(1,|z|)^deg exp(2 max|a_i| |z|).
  GrowthBound growth() const {
    double s = 0.0;
    for (const auto& c : poly_) s += std::abs(c);
    for (const auto& t : kernels_) s += std::abs(t.coefficient);
    return {s, static_cast<double>(std::max(0, degree())), 2.0 * max_center(), 0.0};
  }

  std::string describe() const {
    std::string s = "poly[";
    for (std::size_t k = 0; k < poly_.size(); ++k) s += (k ? "," : "") + to_text(poly_[k]);
    s += "];kernels[";
    for (std::size_t k = 0; k < kernels_.size(); ++k)
      s += (k ? "," : "") + to_text(kernels_[k].coefficient) + "K" + to_text(kernels_[k].center);
    return s + "]";
  }

  friend bool operator==(const EntireFunction& a, const EntireFunction& b) {
    if (a.poly_ != b.poly_ || a.kernels_.size() != b.kernels_.size()) return false;
    for (std::size_t i = 0; i < a.kernels_.size(); ++i)
      if (a.kernels_[i].coefficient != b.kernels_[i].coefficient || a.kernels_[i].center != b.kernels_[i].center)
        return false;
    return true;
  }

 private:
  void add_kernel(const KernelTerm& t) {
    for (auto& k : kernels_)
      if (k.center == t.center) {
        k.coefficient += t.coefficient;
        return;
      }
    kernels_.push_back(t);
  }

  void normalize() {
    while (!poly_.empty() && poly_.back() == cplx{0.0, 0.0}) poly_.pop_back();
    std::erase_if(kernels_, [](const KernelTerm& t) { return t.coefficient == cplx{0.0, 0.0}; });
  }

  std::vector<cplx> poly_;
  std::vector<KernelTerm> kernels_;
};

inline cplx evaluate(const EntireFunction& f, cplx z) { return f(z); }

inline EntireFunction kernel(cplx a) { return EntireFunction({}, {{cplx{1.0, 0.0}, a}}); }

inline EntireFunction monomial(int n) {
  if (n < 0) throw InputError("monomial degree must be non-negative");
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx{0.0, 0.0});
  c.back() = 1.0;
  return EntireFunction(std::move(c), {});
}

inline EntireFunction add(const EntireFunction& f, const EntireFunction& g) {
  std::vector<cplx> poly(std::max(f.poly().size(), g.poly().size()), cplx{0.0, 0.0});
  for (std::size_t k = 0; k < f.poly().size(); ++k) poly[k] += f.poly()[k];
  for (std::size_t k = 0; k < g.poly().size(); ++k) poly[k] += g.poly()[k];
  auto kernels = f.kernels();
  kernels.insert(kernels.end(), g.kernels().begin(), g.kernels().end());
  return EntireFunction(std::move(poly), std::move(kernels));
}

inline EntireFunction scale(cplx c, const EntireFunction& f) {
  auto poly = f.poly();
  for (auto& v : poly) v *= c;
  auto kernels = f.kernels();
  for (auto& t : kernels) t.coefficient *= c;
  return EntireFunction(std::move(poly), std::move(kernels));
}

inline EntireFunction operator+(const EntireFunction& f, const EntireFunction& g) { return add(f, g); }
inline EntireFunction operator-(const EntireFunction& f, const EntireFunction& g) { return add(f, scale(-1.0, g)); }
inline EntireFunction operator*(cplx c, const EntireFunction& f) { return scale(c, f); }

// Anything the modular and operator machinery can integrate: pointwise
// complex values plus a certified growth envelope.
template <class F>
concept Evaluand = requires(const F& f, cplx z) {
  { f(z) } -> std::convertible_to<cplx>;
  { f.growth() } -> std::same_as<GrowthBound>;
};

// A measurable, not necessarily holomorphic, function with its envelope.
class Integrand {
 public:
  Integrand(std::string label, std::function<cplx(cplx)> fn, GrowthBound growth)
      : label_(std::move(label)), fn_(std::move(fn)), growth_(growth) {}

  explicit Integrand(const EntireFunction& f)
      : label_(f.describe()), fn_([f](cplx z) { return f(z); }), growth_(f.growth()), entire_(f) {}

  cplx operator()(cplx z) const { return fn_(z); }
  GrowthBound growth() const { return growth_; }
  const std::string& label() const { return label_; }
  std::vector<cplx> zeros(double radius) const { return entire_ ? entire_->zeros(radius) : std::vector<cplx>{}; }

 private:
  std::string label_;
  std::function<cplx(cplx)> fn_;
  GrowthBound growth_;
  std::optional<EntireFunction> entire_;
};

// Points where |f|^p fails to be smooth, as far as f can tell.
template <class F>
std::vector<cplx> singular_points(const F& f, double radius) {
  if constexpr (requires { { f.zeros(radius) } -> std::convertible_to<std::vector<cplx>>; }) return f.zeros(radius);
  else return {};
}

// w -> w^m conj(w)^n
inline Integrand conj_monomial(int m, int n, cplx coefficient = 1.0) {
  if (m < 0 || n < 0) throw InputError("monomial exponents must be non-negative");
  return Integrand(
      to_text(coefficient) + "*w^" + std::to_string(m) + "*conj(w)^" + std::to_string(n),
      [m, n, coefficient](cplx w) {
        cplx v = coefficient;
        for (int i = 0; i < m; ++i) v *= w;
        for (int i = 0; i < n; ++i) v *= std::conj(w);
        return v;
      },
      GrowthBound{std::abs(coefficient), static_cast<double>(m + n), 0.0, 0.0});
}

template <Evaluand F>
bool vanishes(const F& f) {
  if constexpr (std::same_as<F, EntireFunction>) return f.is_zero();
  else return f.growth().scale == 0.0;
}

}  // namespace fockvar
