#include <gtest/gtest.h>

#include <random>

#include "auxr/hermite.hpp"
#include "oracles.hpp"

using namespace auxr;

namespace {

constexpr double kHalfSqrtPi = 0.886226925452758;

Complex random_order(std::mt19937_64& rng, double re_lo, double re_hi, double im_max) {
  std::uniform_real_distribution<double> re(re_lo, re_hi), im(-im_max, im_max);
  return {re(rng), im(rng)};
}

bool near_negative_integer(Complex nu, double gap) {
  for (int k = 1; k <= 5; ++k)
    if (std::abs(nu + static_cast<double>(k)) < gap) return true;
  return false;
}

}  // namespace

TEST(HermiteSeries, Examples) {
  for (Complex z : {Complex(0.3, 0.0), Complex(-2.0, 1.0), Complex(5.0, -4.0)})
    EXPECT_LE(std::abs(hermite_series(0.0, z).value - 1.0), 1e-15);
  EXPECT_NEAR(hermite_series(-1.0, 0.0).value.real(), kHalfSqrtPi, 1e-14);
  EXPECT_NEAR(hermite_series(3.0, 1.0).value.real(), -4.0, 1e-13);
  EXPECT_EQ(hermite_series(3.0, 1.0).method, HermiteMethod::Series);
}

TEST(HermiteSeries, ConvergenceBudget) {
  EXPECT_THROW(hermite_series({-0.5, 3.0}, {6.0, 2.0}, 1e-12, 5), ConvergenceError);
}

TEST(HermiteIntegral, Examples) {
  EXPECT_NEAR(hermite_integral(-1.0, 0.0).value.real(), kHalfSqrtPi, 1e-13);
  const double oracle_value = std::exp(1.0) * kHalfSqrtPi * oracle::erfc_pos(1.0);
  EXPECT_LE(oracle::rel(hermite_integral(-1.0, 1.0).value, oracle_value), 1e-12);
  const Complex nu{-0.5, -10.0};
  EXPECT_LE(oracle::rel(hermite_integral(nu, 2.0).value, hermite_series(nu, 2.0).value), 1e-8);
  EXPECT_EQ(hermite_integral(-1.0, 1.0).method, HermiteMethod::IntegralRep);
}

TEST(HermiteIntegral, RequiresNegativeRealPart) {
  EXPECT_THROW(hermite_integral(0.0, 1.0), DomainError);
  EXPECT_THROW(hermite_integral({0.5, 2.0}, 1.0), DomainError);
  EXPECT_THROW(hermite(-0.5, 1.0, HermiteMethod::RecurrenceLift), DomainError);
}

TEST(Hermite, DispatchExamples) {
  const HermiteResult h0 = hermite(0.0, {7.0, 2.0});
  EXPECT_LE(std::abs(h0.value - 1.0), 1e-15);
  EXPECT_NEAR(hermite(2.0, 1.5).value.real(), 7.0, 1e-13);
  const Complex a = hermite(-0.5, -3.0, HermiteMethod::Series, 1e-13).value;
  const Complex b = hermite(-0.5, -3.0, HermiteMethod::IntegralRep, 1e-13).value;
  EXPECT_LE(oracle::rel(a, b), 1e-7);
}

TEST(Hermite, AutoReportsMethod) {
  EXPECT_EQ(hermite({-0.5, 1.0}, 1.0).method, HermiteMethod::Series);
  EXPECT_EQ(hermite({-0.5, 1.0}, 8.0).method, HermiteMethod::IntegralRep);
  EXPECT_EQ(hermite({1.5, 1.0}, 8.0).method, HermiteMethod::RecurrenceLift);
}

TEST(Hermite, PolynomialAgreement) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    const Complex z = oracle::uniform_disc(rng, 4.0);
    for (int n = 0; n <= 10; ++n) {
      const Complex expect = oracle::hermite_poly(n, z);
      const Complex got = hermite(static_cast<double>(n), z).value;
      EXPECT_LE(oracle::rel(got, expect), 1e-9) << "n=" << n << " z=" << z;
    }
  }
}

TEST(Hermite, SeriesMatchesIntegral) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Complex nu = random_order(rng, -5.0, -0.1, 10.0);
    const Complex z = oracle::uniform_disc(rng, 3.0);
    const Complex a = hermite(nu, z, HermiteMethod::Series, 1e-13).value;
    const Complex b = hermite(nu, z, HermiteMethod::IntegralRep, 1e-13).value;
    EXPECT_LE(oracle::rel(a, b), 1e-8) << "nu=" << nu << " z=" << z;
  }
}

TEST(Hermite, ReflectionExamples) {
  EXPECT_LE(hermite_reflection_residual(-0.5, 1.0), 1e-9);
  EXPECT_LE(hermite_reflection_residual({0.25, 0.5}, {0.5, -0.5}), 1e-8);
  EXPECT_THROW(hermite_reflection_residual(-3.0, 1.0), DomainError);
}

TEST(Hermite, ReflectionResidual) {
  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 50) {
    const Complex nu = oracle::uniform_disc(rng, 3.0);
    if (near_negative_integer(nu, 0.05)) continue;
    const Complex z = oracle::uniform_disc(rng, 2.0);
    EXPECT_LE(hermite_reflection_residual(nu, z), 1e-8) << "nu=" << nu << " z=" << z;
    ++done;
  }
}

TEST(Hermite, ReflectionMethodMatchesSeries) {
  const Complex nu{-0.5, -10.0};
  for (Complex z : {Complex(1.0, 0.5), Complex(-2.0, -1.0)}) {
    const Complex a = hermite(nu, z, HermiteMethod::Reflection, 1e-12).value;
    const Complex b = hermite(nu, z, HermiteMethod::Series, 1e-13).value;
    EXPECT_LE(oracle::rel(a, b), 1e-8) << z;
  }
  EXPECT_THROW(hermite(-2.0, 1.0, HermiteMethod::Reflection), PoleError);
}

TEST(Hermite, RecurrenceConsistency) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    const Complex nu = random_order(rng, -2.0, 2.0, 3.0);
    const Complex z = oracle::uniform_disc(rng, 4.0);
    const Complex up = hermite(nu + 1.0, z).value;
    const Complex mid = hermite(nu, z).value;
    const Complex down = hermite(nu - 1.0, z).value;
    EXPECT_LE(oracle::rel(up, 2.0 * z * mid - 2.0 * nu * down), 1e-8) << "nu=" << nu << " z=" << z;
  }
}

TEST(Hermite, LiftMatchesSeries) {
  for (Complex nu : {Complex(0.5, 0.0), Complex(1.3, -2.0), Complex(2.7, 4.0)}) {
    for (Complex z : {Complex(3.5, 0.5), Complex(-1.0, 2.0)}) {
      const Complex a = hermite(nu, z, HermiteMethod::RecurrenceLift, 1e-12).value;
      const Complex b = hermite(nu, z, HermiteMethod::Series, 1e-13).value;
      EXPECT_LE(oracle::rel(a, b), 1e-9) << "nu=" << nu << " z=" << z;
    }
  }
}

TEST(Hermite, ScaledIsConsistent) {
  const Complex nu{-0.5, -10.0}, z{1.5, -0.7};
  const Complex plain = hermite(nu, z).value;
  const Complex scaled = hermite_scaled(nu, z).value;
  EXPECT_LE(oracle::rel(scaled, std::exp(-z * z) * plain), 1e-12);
}

TEST(ParabolicU, Examples) {
  EXPECT_LE(std::abs(parabolic_u(-0.5, 0.0).value - 1.0), 1e-14);
  EXPECT_LE(oracle::rel(parabolic_u(-1.5, 2.0).value, 0.735758882342885), 1e-13);
  const HermiteResult u = parabolic_u(0.0, 1.0);
  EXPECT_TRUE(is_finite(u.value));
  EXPECT_LE(parabolic_u_ode_residual(0.0, 1.0), 1e-6);
}

TEST(ParabolicU, OdeResidual) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 20; ++i) {
    const Complex a = oracle::uniform_disc(rng, 3.0);
    const Complex z = oracle::uniform_disc(rng, 4.0);
    EXPECT_LE(parabolic_u_ode_residual(a, z), 1e-5) << "a=" << a << " z=" << z;
  }
}

TEST(Hermite, RejectsBadTolerance) {
  EXPECT_THROW(hermite({-0.5, 1.0}, 1.0, HermiteMethod::Auto, 0.0), DomainError);
}
