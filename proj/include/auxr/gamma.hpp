#pragma once

// Complex gamma, reciprocal gamma and log-gamma.
//
// Lanczos approximation with g = 607/128 and 15 coefficients (Godfrey's set),
// reflection for Re z < 1/2.

#include <array>
#include <cmath>

#include "auxr/core.hpp"

namespace auxr {

namespace detail {

inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr std::array<double, 15> kLanczosCoef = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

inline constexpr double kHalfLog2Pi = 0.91893853320467274178;

// Sum A(x) such that Gamma(x + 1) = sqrt(2 pi) t^{x + 1/2} e^{-t} A(x), t = x + g + 1/2.
inline Complex lanczos_sum(Complex x) {
  Complex acc = kLanczosCoef[0];
  for (std::size_t k = 1; k < kLanczosCoef.size(); ++k)
    acc += kLanczosCoef[k] / (x + static_cast<double>(k));
  return acc;
}

// Returns the pole location if z is a nonpositive integer.
inline bool is_nonpositive_integer(Complex z, long* where = nullptr) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  if (std::floor(z.real()) != z.real()) return false;
  if (where) *where = static_cast<long>(z.real());
  return true;
}

// log Gamma for Re z >= 1/2 (continuous in that half-plane).
inline Complex log_gamma_right(Complex z) {
  const Complex x = z - 1.0;
  const Complex t = x + kLanczosG + 0.5;
  return kHalfLog2Pi + (x + 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

// Gamma for Re z >= 1/2.
inline Complex gamma_right(Complex z) {
  const Complex x = z - 1.0;
  const Complex t = x + kLanczosG + 0.5;
  return std::exp(kHalfLog2Pi + (x + 0.5) * std::log(t) - t) * lanczos_sum(x);
}

}  // namespace detail

/// Gamma(z). Throws PoleError at nonpositive integers.
inline Complex complex_gamma(Complex z) {
  long pole = 0;
  if (detail::is_nonpositive_integer(z, &pole)) throw PoleError(pole);
  if (z.real() >= 0.5) return detail::gamma_right(z);
  return kPi / (sin_pi(z) * detail::gamma_right(1.0 - z));
}

/// 1/Gamma(z), entire; exactly zero at nonpositive integers.
inline Complex recip_gamma(Complex z) {
  if (detail::is_nonpositive_integer(z)) return 0.0;
  if (z.real() >= 0.5) return 1.0 / detail::gamma_right(z);
  return sin_pi(z) * detail::gamma_right(1.0 - z) / kPi;
}

/// log Gamma(z), the branch continuous off the negative real axis
/// (real for real positive z). Throws PoleError at nonpositive integers.
inline Complex complex_log_gamma(Complex z) {
  long pole = 0;
  if (detail::is_nonpositive_integer(z, &pole)) throw PoleError(pole);
  if (z.real() >= 0.5) return detail::log_gamma_right(z);
  // Shift into the right half-plane: log Gamma(z) = log Gamma(z + n) - sum log(z + k).
  const int n = static_cast<int>(std::ceil(0.5 - z.real()));
  Complex shift = 0.0;
  for (int k = 0; k < n; ++k) shift += std::log(z + static_cast<double>(k));
  return detail::log_gamma_right(z + static_cast<double>(n)) - shift;
}

}  // namespace auxr
