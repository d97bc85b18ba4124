#include <gtest/gtest.h>

#include <random>

#include "auxr/gamma.hpp"
#include "oracles.hpp"

using namespace auxr;

namespace {

std::vector<Complex> away_from_poles(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    const Complex z = oracle::uniform_disc(rng, 10.0);
    bool near_pole = false;
    for (int k = 0; k <= 11; ++k) near_pole = near_pole || std::abs(z + static_cast<double>(k)) < 0.1;
    if (!near_pole) out.push_back(z);
  }
  return out;
}

}  // namespace

TEST(Gamma, Values) {
  EXPECT_NEAR(std::abs(complex_gamma(1.0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(complex_gamma(0.5).real(), 1.77245385090552, 1e-13);
  EXPECT_NEAR(complex_gamma(5.0).real(), 24.0, 24.0 * 1e-13);
  EXPECT_NEAR(complex_gamma(5.0).imag(), 0.0, 1e-13);
}

TEST(Gamma, PoleCarriesLocation) {
  EXPECT_THROW(complex_gamma(0.0), DomainError);
  try {
    complex_gamma(-3.0);
    FAIL();
  } catch (const PoleError& e) {
    EXPECT_EQ(e.location(), -3);
  }
}

TEST(Gamma, Reciprocal) {
  EXPECT_EQ(recip_gamma(-2.0), Complex(0.0));
  EXPECT_NEAR(std::abs(recip_gamma(1.0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(recip_gamma(0.5).real(), 0.564189583547756, 1e-14);
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(recip_gamma(Complex(-k, 0.0)), Complex(0.0)) << k;
}

TEST(Gamma, LogGamma) {
  EXPECT_NEAR(std::abs(complex_log_gamma(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(complex_log_gamma(2.0)), 0.0, 1e-14);
  EXPECT_NEAR(complex_log_gamma(10.0).real(), oracle::log_factorial(9), 1e-12);
  EXPECT_NEAR(complex_log_gamma(10.0).real(), 12.8018274800815, 1e-12);
  EXPECT_THROW(complex_log_gamma(-4.0), PoleError);
}

TEST(Gamma, Recurrence) {
  for (Complex z : away_from_poles(200, 1)) {
    EXPECT_LE(oracle::rel(complex_gamma(z + 1.0), z * complex_gamma(z)), 1e-12) << z;
  }
}

TEST(Gamma, Reflection) {
  for (Complex z : away_from_poles(200, 2)) {
    const Complex lhs = complex_gamma(z) * complex_gamma(1.0 - z) * std::sin(kPi * z) / kPi;
    EXPECT_LE(std::abs(lhs - 1.0), 1e-11) << z;
  }
}

TEST(Gamma, ReciprocalTimesGamma) {
  for (Complex z : away_from_poles(200, 3)) {
    EXPECT_LE(std::abs(recip_gamma(z) * complex_gamma(z) - 1.0), 1e-12) << z;
  }
}

TEST(Gamma, ExpLogGammaMatches) {
  for (Complex z : away_from_poles(100, 4)) {
    EXPECT_LE(oracle::rel(std::exp(complex_log_gamma(z)), complex_gamma(z)), 1e-12) << z;
  }
}

TEST(Gamma, OmegaPowers) {
  EXPECT_LE(std::abs(kOmega * kOmega - kI), 4 * kEps);
  EXPECT_LE(std::abs(std::pow(kOmega, 4) + 1.0), 8 * kEps);
}
