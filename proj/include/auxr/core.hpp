#pragma once

// Shared scalar type, constants, error types and result records.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace auxr {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kLnPi = 1.1447298858494001741;
inline constexpr double kEps = 2.220446049250313e-16;

/// The eighth root of unity e^{i pi/4}.
inline const Complex kOmega{kSqrt2 / 2.0, kSqrt2 / 2.0};

inline const Complex kI{0.0, 1.0};

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A gamma-function pole at a nonpositive integer.
class PoleError : public DomainError {
 public:
  explicit PoleError(long location)
      : DomainError("gamma pole at " + std::to_string(location)), location_(location) {}
  long location() const noexcept { return location_; }

 private:
  long location_;
};

/// A series or quadrature that could not meet its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A non-finite integrand sample.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(long node, double u)
      : std::runtime_error("non-finite integrand sample at node " + std::to_string(node) +
                           " (u = " + std::to_string(u) + ")"),
        node_(node),
        u_(u) {}
  long node() const noexcept { return node_; }
  double parameter() const noexcept { return u_; }

 private:
  long node_;
  double u_;
};

/// Value plus a relative error estimate, as returned by every quadrature-backed operation.
struct EvalResult {
  Complex value{};
  double err_estimate = 0.0;
  long nodes = 0;
  bool degraded = false;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// |a - b| / max(|a|, |b|), zero when both vanish.
inline double rel_diff(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

/// Neumaier-compensated complex accumulator; order of additions fixes the result.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(re_, cre_, x.real());
    add_part(im_, cim_, x.imag());
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

/// sin(pi x) with exact argument reduction for real x.
inline double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(kPi * r);
}

inline double cos_pi(double x) { return sin_pi(x + 0.5); }

/// sin(pi z) for complex z.
inline Complex sin_pi(Complex z) {
  const double b = kPi * z.imag();
  return {sin_pi(z.real()) * std::cosh(b), cos_pi(z.real()) * std::sinh(b)};
}

/// base^w on the principal branch, as exp(w log base).
inline Complex principal_pow(Complex base, Complex w) { return std::exp(w * std::log(base)); }

}  // namespace auxr
