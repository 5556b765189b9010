#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "fockvar/modular.hpp"

using fockvar::cplx;
using fockvar::EntireFunction;
using fockvar::FockModular;
using fockvar::VariableExponent;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double tol = 1e-9;

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST(Modular, GaugeOfConstantExponent) {
  for (const double p : {1.5, 2.0, 4.0}) EXPECT_NEAR(fockvar::gauge_constant(VariableExponent::constant(p), tol), pi / p, 1e-10);
}

TEST(Modular, ConstantOneHasModularOne) {
  for (const auto& p : {VariableExponent::constant(2.0), VariableExponent::constant(3.0),
                        VariableExponent::log_decay(2.0, 1.0), VariableExponent::radial_bump(2.0, 1.0, 1.0)})
    EXPECT_NEAR(fockvar::modular(EntireFunction::constant(1.0), p, tol).value, 1.0, 1e-8) << p.describe();
}

// sqrt(n!/2^n), from the oracle script.
TEST(Modular, MonomialNormsInF2) {
  const double oracle[] = {1.0, 0.7071067811865475244, 0.7071067811865475244, 0.86602540378443864676,
                           1.2247448713915890491, 1.9364916731037084426, 3.3541019662496845446};
  const FockModular two(VariableExponent::constant(2.0), tol);
  for (int n = 0; n <= 6; ++n) {
    const auto r = two.norm(fockvar::monomial(n));
    EXPECT_NEAR(r.value, oracle[n], 1e-7) << n;
    EXPECT_LE(*r.residual, tol);
    EXPECT_NEAR(*r.modular_at_value, 1.0, tol);
  }
}

TEST(Modular, ZInF4) {
  EXPECT_NEAR(fockvar::luxemburg_norm(fockvar::monomial(1), VariableExponent::constant(4.0), tol).value,
              0.59460355750136053336, 1e-7);
}

TEST(Modular, ConstantExponentReduction) {
  const EntireFunction f({cplx(0.2, -0.4), 0.0, cplx(0.7, 0.1)}, {{cplx(-0.3, 0.5), cplx(0.4, -0.9)}});
  for (const double p0 : {1.5, 2.0, 4.0}) {
    const FockModular s(VariableExponent::constant(p0), tol);
    EXPECT_NEAR(s.norm(f).value, std::pow(s.modular(f).value, 1.0 / p0), 1e-7) << p0;
  }
}

TEST(Modular, ModularScalesWithLambda) {
  const FockModular s(VariableExponent::constant(3.0), tol);
  const auto f = fockvar::kernel(cplx(0.5, 0.5));
  EXPECT_NEAR(s.modular(f, 2.0).value, s.modular(f).value / 8.0, 1e-9);
}

TEST(Modular, ZeroFunction) {
  const FockModular s(VariableExponent::log_decay(2.0, 1.0), tol);
  EXPECT_EQ(s.norm(EntireFunction{}).value, 0.0);
  EXPECT_EQ(s.modular(EntireFunction{}).value, 0.0);
}

TEST(Modular, VariableExponentUnitBall) {
  const FockModular s(VariableExponent::radial_bump(1.5, 2.0, 1.5), tol);
  const EntireFunction f({1.0, cplx(0.0, -1.0), 0.5}, {});
  const auto n = s.norm(f);
  EXPECT_NEAR(s.modular(f, n.value).value, 1.0, 1e-8);
  EXPECT_GT(s.modular(f, n.value * 0.999).value, 1.0);
  EXPECT_LT(s.modular(f, n.value * 1.001).value, 1.0);
}

TEST(Modular, PairingReproducesValues) {
  const EntireFunction f({cplx(0.5, 0.5), 1.0, cplx(0.0, -0.3)}, {{0.4, cplx(0.2, -0.7)}});
  for (const cplx a : {cplx(0.0, 0.0), cplx(0.8, -0.3), cplx(-1.2, 0.9)}) {
    const auto pr = fockvar::pairing(f, fockvar::kernel(a), tol);
    EXPECT_LT(std::abs(pr.value - f(a)), 1e-8) << a;
  }
}

TEST(Modular, MonomialsAreOrthogonal) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const auto pr = fockvar::pairing(fockvar::monomial(m), fockvar::monomial(n), tol);
      const double expected = m == n ? factorial(n) / std::pow(2.0, n) : 0.0;
      EXPECT_LT(std::abs(pr.value - expected), 1e-9) << m << "," << n;
    }
}

TEST(Modular, HolderClosedCase) {
  const auto two = VariableExponent::constant(2.0);
  const auto r = fockvar::holder_margin(EntireFunction::constant(1.0), EntireFunction::constant(1.0), two, tol);
  ASSERT_EQ(r.cases.size(), 1u);
  EXPECT_NEAR(r.cases[0].lhs, pi / 2.0, 1e-9);
  EXPECT_NEAR(*r.cases[0].rhs, 2.0, 1e-9);
  EXPECT_TRUE(r.passed());
}

// For constant p the dual-pairing norm is 2 p^{-1/p} p'^{-1/p'} ||f||.
TEST(Modular, TripleNormConstantExponent) {
  const EntireFunction f({0.3, cplx(0.0, 1.0)}, {{cplx(0.2, 0.2), 0.6}});
  for (const double p : {1.5, 2.0, 3.0}) {
    const double q = p / (p - 1.0);
    const auto t = fockvar::triple_norm(f, VariableExponent::constant(p), tol);
    EXPECT_NEAR(t.value / *t.luxemburg, 2.0 * std::pow(p, -1.0 / p) * std::pow(q, -1.0 / q), 1e-8) << p;
    EXPECT_LE(t.value, *t.upper_bound);
  }
}

// Frozen from tests/oracles/equivalence_counterexample.py: for an exponent
// crossing 2 the dual-pairing norm falls below the Luxemburg norm.
TEST(Modular, TripleNormBelowLuxemburgForVariableExponent) {
  const EntireFunction f({cplx(-0.6363492541157398, 0.06810095085928447), cplx(0.5576923813800105, 0.2730005017903212),
                          cplx(-0.959227252241091, 0.02152651871667688)},
                         {{cplx(0.5967786586842503, 0.6407919646801594), cplx(-1.4421587745878952, 0.13659124367957487)}});
  const auto p =
      VariableExponent::expression("2.5438751708047023 + 0.808113769462418*sin(re(z))*exp(-abs(z)/4)", 1.7357613, 3.3519891);
  const auto t = fockvar::triple_norm(f, p, tol);
  EXPECT_NEAR(*t.luxemburg, 7.493522643027089, 1e-7);
  EXPECT_NEAR(t.value, 7.401939352721737, 1e-7);
  EXPECT_LT(t.value, *t.luxemburg);
  EXPECT_NEAR(*t.modular_at_value, 1.0, 1e-8);
}

TEST(Modular, UnweightedModular) {
  // int e^{-p|z|^2} dA = pi / p
  const fockvar::Integrand g("exp(-|z|^2)", [](cplx z) { return cplx(std::exp(-std::norm(z))); },
                             fockvar::GrowthBound{1.0, 0.0, 0.0, -1.0});
  EXPECT_NEAR(fockvar::unweighted_modular(g, VariableExponent::constant(2.0), tol).value, pi / 2.0, 1e-9);
  EXPECT_THROW(fockvar::unweighted_modular(fockvar::Integrand(fockvar::monomial(1)), VariableExponent::constant(2.0), tol),
               fockvar::InputError);
}

TEST(Modular, RejectsBadTolerance) {
  EXPECT_THROW(FockModular(VariableExponent::constant(2.0), 0.0), fockvar::InputError);
  EXPECT_THROW(fockvar::pairing(fockvar::monomial(1), fockvar::monomial(1), -1.0), fockvar::InputError);
}
