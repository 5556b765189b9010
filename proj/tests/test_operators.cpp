#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "fockvar/operators.hpp"

using fockvar::cplx;
using fockvar::EntireFunction;
using fockvar::FockModular;
using fockvar::VariableExponent;
using fockvar::WeightSpec;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double tol = 1e-9;

}  // namespace

// A_{2,1} products of the Gaussian weight, from the mpmath oracle (I_0 form).
TEST(Operators, AprGaussianOracle) {
  const double centers[] = {0.0, 2.0, 4.0, 6.0};
  const double oracle[] = {1.086161269630487557, 25.349711463648806763, 10318.251524386898743, 9307587.5856436991263};
  for (int k = 0; k < 4; ++k) {
    const auto r = fockvar::apr_product(WeightSpec::gaussian(1.0), 2.0, 1.0, centers[k], tol);
    EXPECT_NEAR(r.value / oracle[k], 1.0, 1e-8) << centers[k];
    EXPECT_LE(r.error, 1e-8 * r.value);
  }
}

TEST(Operators, AprConstantWeights) {
  for (const double c : {0.5, 1.0, 7.0})
    EXPECT_NEAR(fockvar::apr_product(WeightSpec::constant(c), 2.0, 1.0, 0.0, tol).value, 1.0, 1e-10);
}

TEST(Operators, AprPowerWeightThroughOrigin) {
  // The cone point of (1 + |z|)^gamma sits inside the ball.
  const auto w = WeightSpec::power(2.0);
  const auto a = fockvar::apr_product(w, 3.0, 1.5, cplx(0.4, 0.3), tol);
  const auto b = fockvar::apr_product(w.scaled(11.0), 3.0, 1.5, cplx(0.4, 0.3), tol);
  EXPECT_GE(a.value, 1.0);
  EXPECT_NEAR(a.value, b.value, 1e-12 * a.value);
}

TEST(Operators, AprRejectsBadInput) {
  EXPECT_THROW(fockvar::apr_product(WeightSpec::gaussian(1.0), 1.0, 1.0, 0.0, tol), fockvar::InputError);
  EXPECT_THROW(fockvar::apr_product(WeightSpec::gaussian(1.0), 2.0, 0.0, 0.0, tol), fockvar::InputError);
  EXPECT_THROW(WeightSpec::power(-2.5), fockvar::InputError);
  EXPECT_THROW(WeightSpec::constant(0.0), fockvar::InputError);
}

TEST(Operators, ProjectionReproducesEntireFunctions) {
  const EntireFunction f({cplx(0.1, 0.2), 0.0, cplx(-0.5, 0.3)}, {{cplx(0.7, 0.0), cplx(0.3, -0.6)}});
  for (const cplx z : {cplx(0.0, 0.0), cplx(1.0, 1.0), cplx(-1.4, 0.2)}) {
    const auto e = fockvar::project_pointwise(fockvar::Integrand(f), z, tol);
    EXPECT_LT(std::abs(e.value - f(z)), 1e-8) << z;
  }
}

TEST(Operators, ProjectionMonomialClosedForm) {
  EXPECT_TRUE(fockvar::project_monomial(1, 2).is_zero());
  EXPECT_EQ(fockvar::project_monomial(1, 1).poly(), std::vector<cplx>{0.5});
  // P(w^3 conj(w)) = 3/2 z^2
  const auto p31 = fockvar::project_monomial(3, 1);
  EXPECT_NEAR(std::abs(p31(cplx(1.0, 0.0)) - 1.5), 0.0, 1e-15);
  for (const cplx z : {cplx(0.3, -0.2), cplx(-1.0, 1.0)}) {
    const auto e = fockvar::project_pointwise(fockvar::conj_monomial(3, 1), z, tol);
    EXPECT_LT(std::abs(e.value - p31(z)), 1e-8);
  }
  EXPECT_LT(std::abs(fockvar::project_pointwise(fockvar::conj_monomial(0, 1), cplx(0.7, 0.1), tol).value), 1e-8);
}

TEST(Operators, ProjectSamplesOrdering) {
  const std::vector<cplx> pts{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  const auto s = fockvar::project_samples(fockvar::Integrand(fockvar::monomial(1)), pts, tol);
  ASSERT_EQ(s.values.size(), 3u);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_LT(std::abs(s.values[i] - pts[i]), 1e-8);
}

TEST(Operators, HOperator) {
  for (const cplx z : {cplx(0.0, 0.0), cplx(2.0, -1.0)})
    EXPECT_NEAR(std::abs(fockvar::h_operator(EntireFunction::constant(1.0), z, tol).value - pi), 0.0, 1e-8);
  // H z = pi z: the Gaussian is symmetric around z.
  const cplx z(0.5, 0.5);
  EXPECT_LT(std::abs(fockvar::h_operator(fockvar::monomial(1), z, tol).value - pi * z), 1e-8);
}

TEST(Operators, JOperatorClosedForm) {
  for (const cplx w : {cplx(0.0, 0.0), cplx(1.0, 0.5), cplx(-1.2, -1.5)}) {
    const double exact = pi / 2.0 * std::exp(std::norm(w) / 2.0);
    EXPECT_NEAR(fockvar::j_operator(EntireFunction::constant(1.0), w, tol).value / exact, 1.0, 1e-7) << w;
  }
}

TEST(Operators, MeanValueClosedCase) {
  const auto r = fockvar::mean_value_check(EntireFunction::constant(1.0), 0.0, 1.0, tol);
  ASSERT_EQ(r.cases.size(), 1u);
  EXPECT_NEAR(*r.cases[0].rhs, std::numbers::e - 1.0, 1e-9);
  EXPECT_DOUBLE_EQ(r.cases[0].lhs, 1.0);
  EXPECT_TRUE(r.passed());
}

TEST(Operators, MeanValueWithZeroInsideDisk) {
  const auto f = fockvar::monomial(1) - EntireFunction::constant(cplx(0.3, 0.2));
  const auto r = fockvar::mean_value_check(f, cplx(0.5, 0.0), 1.0, tol);
  EXPECT_TRUE(r.passed());
  EXPECT_LT(r.cases[0].extras[0].second, 1e-6);
}

TEST(Operators, PointGrid) {
  const fockvar::PointGrid g{1.0, 0.5};
  EXPECT_EQ(g.points().size(), 9u + 4u);
  EXPECT_EQ(g.refined().spacing, 0.25);
}

TEST(Operators, EvaluationConstantOfKernel) {
  const FockModular two(VariableExponent::constant(2.0), tol);
  const auto r = fockvar::evaluation_bound_check(fockvar::kernel(1.0), two, tol);
  EXPECT_NEAR(*r.measured, 1.0, 1e-6);
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(fockvar::evaluation_bound_check(EntireFunction{}, two, tol), fockvar::InputError);
}

TEST(Operators, InclusionZExample) {
  const FockModular p2(VariableExponent::constant(2.0), tol), p4(VariableExponent::constant(4.0), tol);
  const auto r = fockvar::inclusion_check(fockvar::monomial(1), p2, p4, tol);
  EXPECT_TRUE(r.passed());
  EXPECT_NEAR(r.cases[0].extras[1].second, 0.59460355750136053336, 1e-7);
  EXPECT_NEAR(*r.measured, 0.59460355750136053336 / std::sqrt(0.5), 1e-7);
  EXPECT_THROW(fockvar::inclusion_check(fockvar::monomial(1), p4, p2, tol), fockvar::InputError);
}

// d(h) = ||(K_h - K_0)/(2h) - z||_{F^2}, from the oracle script.
TEST(Operators, DensityResidualOracle) {
  const FockModular two(VariableExponent::constant(2.0), tol);
  const double hs[] = {0.25, 0.125, 0.0625};
  const double oracle[] = {0.18053756469861131733, 0.088851111336002629765, 0.044251793327170056974};
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(two.norm(fockvar::density_residual(hs[k])).value, oracle[k], 1e-8);
  const auto probe = fockvar::kernel_density_probe(two, 0.25, tol);
  EXPECT_TRUE(probe.passed());
  EXPECT_NEAR(*probe.measured, 1.0, 0.2);
}

TEST(Operators, ProjectionBoundednessSample) {
  const FockModular two(VariableExponent::constant(2.0), tol);
  const std::vector<fockvar::ProjectionCase> base{fockvar::projection_case_monomial(1, 1),
                                                  fockvar::projection_case_entire(fockvar::kernel(0.5))};
  const auto r = fockvar::projection_boundedness_sample(two, base, {}, tol);
  EXPECT_TRUE(r.passed());
  // P is the orthogonal projection on L^2, so ||Pg|| <= ||g||.
  EXPECT_LE(*r.measured, 1.0 + 1e-8);
}
