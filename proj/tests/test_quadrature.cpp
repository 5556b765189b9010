#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "fockvar/quadrature.hpp"

using fockvar::cplx;
using fockvar::DecayBound;
using fockvar::GrowthBound;
using fockvar::QuadratureOptions;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

// int |z|^{2n} e^{-2|z|^2} dA = pi n! / 2^{n+1}; values from the mpmath oracle.
TEST(Quadrature, GaussianMoments) {
  const double oracle[] = {1.5707963267948966192, 0.78539816339744830962, 0.78539816339744830962,
                           1.1780972450961724644, 2.3561944901923449288,  5.8904862254808623221,
                           17.671458676442586966};
  for (int n = 0; n <= 6; ++n) {
    const auto r = fockvar::integrate_plane(
        [n](cplx z) { return std::pow(std::norm(z), n) * std::exp(-2.0 * std::norm(z)); }, DecayBound{1.0, 2 * n, 2.0},
        1e-12);
    EXPECT_NEAR(r.value / oracle[n], 1.0, 1e-8) << n;
    EXPECT_LE(r.error, 1e-12);
  }
}

TEST(Quadrature, ErrorEstimateCoversTruth) {
  const double exact = 2.3561944901923449288;
  for (const double tol : {1e-6, 1e-9, 1e-12}) {
    const auto r = fockvar::integrate_plane([](cplx z) { return std::pow(std::norm(z), 4) * std::exp(-2.0 * std::norm(z)); },
                                            DecayBound{1.0, 8, 2.0}, tol);
    EXPECT_LE(std::abs(r.value - exact), std::max(r.error, 1e-14)) << tol;
  }
}

TEST(Quadrature, RuleWeightsSumToDiskArea) {
  for (const double radius : {0.3, 1.0, 4.5}) {
    const auto r = fockvar::integrate_disk([](cplx) { return 1.0; }, cplx(1.0, -2.0), radius, 1e-10);
    EXPECT_NEAR(r.rule.total_weight() / (pi * radius * radius), 1.0, 1e-10);
    EXPECT_NEAR(r.value / (pi * radius * radius), 1.0, 1e-10);
    double sum = 0.0;
    r.rule.for_each_node([&](cplx, double w) { sum += w; });
    EXPECT_NEAR(sum / (pi * radius * radius), 1.0, 1e-10);
  }
}

TEST(Quadrature, DiskGaussian) {
  // pi (1 - 1/e), from the oracle script.
  const auto r = fockvar::integrate_disk([](cplx w) { return std::exp(-std::norm(w)); }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(r.value, 1.9858653037988715206, 1e-11);
}

TEST(Quadrature, OffCenterRule) {
  // int e^{-|z - c|^2} dA = pi wherever the rule is centered.
  const cplx c(2.0, 1.0);
  QuadratureOptions o;
  o.center = c;
  const auto r = fockvar::integrate_plane([c](cplx z) { return std::exp(-std::norm(z - c)); }, DecayBound{1.0, 0, 1.0},
                                          1e-11, o);
  EXPECT_NEAR(r.value, pi, 1e-10);
}

TEST(Quadrature, ComplexValues) {
  const auto r = fockvar::integrate_plane([](cplx z) { return z * std::conj(z) * cplx(1.0, 2.0) * std::exp(-std::norm(z)); },
                                          DecayBound{3.0, 2, 1.0}, 1e-11);
  EXPECT_NEAR(r.value.real(), pi, 1e-10);
  EXPECT_NEAR(r.value.imag(), 2.0 * pi, 1e-10);
}

TEST(Quadrature, TailBoundAndRadius) {
  const DecayBound b{2.0, 3, 1.5};
  const double radius = fockvar::tail_radius(b, 1e-12);
  EXPECT_LE(fockvar::tail_bound(b, radius), 1e-12);
  EXPECT_GT(fockvar::tail_bound(b, radius * 0.99), 1e-12);
  // Exact tail of e^{-r^2} beyond R is pi e^{-R^2}.
  EXPECT_NEAR(fockvar::tail_bound(DecayBound{1.0, 0, 1.0}, 3.0), pi * std::exp(-9.0), 1e-18);
  EXPECT_THROW(fockvar::tail_radius(DecayBound{1.0, 0, 0.0}, 1e-6), fockvar::NumericalError);
}

TEST(Quadrature, GaussianDecayRejectsGrowth) {
  EXPECT_THROW(fockvar::gaussian_decay(GrowthBound{1.0, 0.0, 0.0, 2.0}, 2.0), fockvar::NumericalError);
  const auto d = fockvar::gaussian_decay(GrowthBound{1.0, 2.0, 1.0, 0.5}, 2.0);
  EXPECT_DOUBLE_EQ(d.rate, 0.75);
  EXPECT_EQ(d.degree, 2);
}

TEST(Quadrature, TranslatedEnvelopeDominates) {
  const GrowthBound g{1.5, 2.0, 0.7, -0.4};
  const cplx shift(1.2, -0.8);
  const auto t = fockvar::translated(g, shift);
  for (double r = 0.0; r <= 8.0; r += 0.25)
    for (int j = 0; j < 16; ++j) {
      const cplx v = std::polar(r, 2.0 * pi * j / 16.0);
      EXPECT_LE(g.at(std::abs(shift + v)), t.at(r) * (1.0 + 1e-12));
    }
}

TEST(Quadrature, SingularPointsAgreeWithPlainRule) {
  // |z - a|^{1.5} e^{-|z|^2} has a cone point at a.
  const cplx a(0.7, 0.4);
  const auto f = [a](cplx z) { return std::pow(std::abs(z - a), 1.5) * std::exp(-std::norm(z)); };
  QuadratureOptions plain;
  plain.best_effort = true;
  QuadratureOptions hinted = plain;
  hinted.singular_points = {a};
  const auto r1 = fockvar::integrate_plane(f, DecayBound{4.0, 2, 1.0}, 1e-10, plain);
  const auto r2 = fockvar::integrate_plane(f, DecayBound{4.0, 2, 1.0}, 1e-10, hinted);
  EXPECT_NEAR(r1.value, r2.value, 1e-9);
  EXPECT_LT(r2.evaluations, r1.evaluations);
}

TEST(Quadrature, RejectsBadArguments) {
  const auto one = [](cplx) { return 1.0; };
  EXPECT_THROW(fockvar::integrate_disk(one, 0.0, 0.0, 1e-6), fockvar::InputError);
  EXPECT_THROW(fockvar::integrate_disk(one, 0.0, 1.0, 0.0), fockvar::InputError);
  EXPECT_THROW(fockvar::integrate_plane(one, DecayBound{}, -1.0), fockvar::InputError);
}

TEST(Quadrature, TailCheckCatchesWrongEnvelope) {
  // The declared envelope decays much faster than the integrand.
  const auto slow = [](cplx z) { return std::exp(-0.05 * std::norm(z)); };
  EXPECT_THROW(fockvar::integrate_plane(slow, DecayBound{1.0, 0, 4.0}, 1e-8), fockvar::NumericalError);
}
