#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "fockvar/exponents.hpp"

using fockvar::cplx;
using fockvar::InputError;
using fockvar::VariableExponent;

TEST(Exponents, ClosedFormValues) {
  EXPECT_EQ(VariableExponent::constant(2.0)(cplx(3.0, 4.0)), 2.0);
  EXPECT_DOUBLE_EQ(VariableExponent::log_decay(2.0, 1.0)(0.0), 3.0);
  EXPECT_DOUBLE_EQ(VariableExponent::radial_bump(2.0, 1.0, 1.0)(0.5), 2.5);
  EXPECT_DOUBLE_EQ(VariableExponent::radial_bump(2.0, 1.0, 1.0)(cplx(0.0, 3.0)), 2.0);
}

TEST(Exponents, DeclaredBands) {
  const auto ld = VariableExponent::log_decay(2.0, 1.0);
  EXPECT_EQ(ld.p_minus(), 2.0);
  EXPECT_EQ(ld.p_plus(), 3.0);
  EXPECT_EQ(*ld.p_infinity(), 2.0);
  const auto neg = VariableExponent::log_decay(3.0, -1.0);
  EXPECT_EQ(neg.p_minus(), 2.0);
  EXPECT_EQ(neg.p_plus(), 3.0);
  EXPECT_TRUE(VariableExponent::constant(1.7).is_constant());
  EXPECT_FALSE(ld.is_constant());
}

TEST(Exponents, RejectsBadBands) {
  EXPECT_THROW(VariableExponent::constant(0.5), InputError);
  EXPECT_THROW(VariableExponent::constant(std::nan("")), InputError);
  EXPECT_THROW(VariableExponent::log_decay(0.5, 1.0), InputError);
  EXPECT_THROW(VariableExponent::radial_bump(2.0, 1.0, 0.0), InputError);
  EXPECT_THROW(VariableExponent::expression("2", 3.0, 2.0), InputError);
  EXPECT_THROW(VariableExponent::expression("2", 2.0, 3.0, 0.5), InputError);
}

TEST(Exponents, ExpressionSpotCheck) {
  const auto p = VariableExponent::expression("2 + sin(re(z))", 1.0, 3.0, 2.0);
  EXPECT_NEAR(p(cplx(1.0, 0.0)), 2.0 + std::sin(1.0), 1e-15);
  // The declared band is checked on the reference grid.
  EXPECT_THROW(VariableExponent::expression("2 + sin(re(z))", 1.5, 2.5), InputError);
  EXPECT_THROW(VariableExponent::expression("1 / (1 - abs(z))", 1.0, 5.0), InputError);
}

TEST(Exponents, EvaluateFlagsOutOfBand) {
  const auto p = VariableExponent::custom("spike", [](cplx z) { return z.real() == 0.3 ? 9.0 : 2.0; }, 2.0, 3.0);
  const auto v = fockvar::evaluate_exponent(p, cplx(0.3, 0.0));
  EXPECT_TRUE(v.clamped);
  EXPECT_EQ(v.value, 3.0);
  EXPECT_FALSE(fockvar::evaluate_exponent(p, cplx(0.2, 0.0)).clamped);
}

TEST(Exponents, Conjugate) {
  const auto c = fockvar::conjugate(VariableExponent::constant(4.0));
  EXPECT_DOUBLE_EQ(c(0.0), 4.0 / 3.0);
  const auto ld = VariableExponent::log_decay(2.0, 1.0);
  const auto d = fockvar::conjugate(ld);
  EXPECT_DOUBLE_EQ(d.p_minus(), 1.5);
  EXPECT_DOUBLE_EQ(d.p_plus(), 2.0);
  EXPECT_DOUBLE_EQ(*d.p_infinity(), 2.0);
  for (const cplx z : {cplx(0.0, 0.0), cplx(1.0, 2.0), cplx(-5.0, 0.5)}) {
    const double q = ld(z);
    EXPECT_NEAR(1.0 / q + 1.0 / d(z), 1.0, 1e-15);
  }
  EXPECT_EQ(fockvar::conjugate(d).describe(), ld.describe());
  EXPECT_EQ(d.radial_breakpoints(), ld.radial_breakpoints());
}

TEST(Exponents, ConjugateNeedsPMinusAboveOne) {
  EXPECT_THROW(fockvar::conjugate(VariableExponent::constant(1.0)), InputError);
  EXPECT_THROW(fockvar::conjugate(VariableExponent::log_decay(1.0, 1.0)), InputError);
}

TEST(Exponents, RadialBreakpoints) {
  EXPECT_EQ(VariableExponent::radial_bump(2.0, 1.0, 1.5).radial_breakpoints(), std::vector<double>{1.5});
  EXPECT_TRUE(VariableExponent::log_decay(2.0, 1.0).radial_breakpoints().empty());
}

TEST(Exponents, ConstantRegularity) {
  const auto p = VariableExponent::constant(3.0);
  const std::vector<double> radii{0.1, 0.5};
  const std::vector<cplx> centers{0.0, cplx(2.0, -1.0)};
  EXPECT_EQ(*fockvar::check_log_holder_local(p, radii, centers).measured, 1.0);
  const std::vector<double> far{0.0, 10.0, 1000.0};
  EXPECT_EQ(*fockvar::check_log_holder_decay(p, far).measured, 0.0);
}

TEST(Exponents, LogDecayConstantIsAmplitude) {
  const std::vector<double> far{0.0, 1.0, 100.0};
  EXPECT_NEAR(*fockvar::check_log_holder_decay(VariableExponent::log_decay(2.0, 1.0), far).measured, 1.0, 1e-12);
  EXPECT_NEAR(*fockvar::check_log_holder_decay(VariableExponent::log_decay(2.0, 0.25), far).measured, 0.25, 1e-12);
}

TEST(Exponents, StepExponentBlowsUp) {
  const auto step = VariableExponent::custom("step", [](cplx z) { return z.real() < 0.0 ? 2.0 : 3.0; }, 2.0, 3.0);
  const std::vector<cplx> origin{0.0};
  double prev = 0.0;
  for (const double r : {0.5, 0.1, 0.02}) {
    const std::vector<double> radius{r};
    const double v = *fockvar::check_log_holder_local(step, radius, origin).measured;
    EXPECT_NEAR(v, 1.0 / (std::numbers::pi * r * r), 1e-9 / (r * r));
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(Exponents, RegularityInputChecks) {
  const auto p = VariableExponent::constant(2.0);
  const std::vector<double> none;
  const std::vector<double> big{0.75};
  const std::vector<cplx> centers{0.0};
  EXPECT_THROW(fockvar::check_log_holder_local(p, none, centers), InputError);
  EXPECT_THROW(fockvar::check_log_holder_local(p, big, centers), InputError);
  const std::vector<double> far{1.0};
  EXPECT_THROW(fockvar::check_log_holder_decay(VariableExponent::expression("2", 2.0, 2.0), far), InputError);
}
