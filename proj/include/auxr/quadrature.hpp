#pragma once

// Trapezoid quadrature along straight lines in the complex plane.
//
// Integrands handled here are analytic on a strip around the line and decay
// like a Gaussian or an exponential, so the equispaced trapezoid sum converges
// geometrically in 1/h. The error estimate compares the h grid with the 2h
// grid formed by every other node.

#include <cmath>
#include <concepts>
#include <functional>
#include <limits>
#include <string>

#include "auxr/core.hpp"

namespace auxr {

/// Oriented line zeta(u) = anchor + e^{i angle} u, traversed for increasing u.
class LineContour {
 public:
  LineContour(Complex anchor, double angle) : anchor_(anchor), angle_(normalize(angle)) {
    direction_ = std::polar(1.0, angle_);
  }

  Complex anchor() const { return anchor_; }
  double angle() const { return angle_; }
  Complex direction() const { return direction_; }
  Complex at(double u) const { return anchor_ + direction_ * u; }

  static LineContour real_line() { return {0.0, 0.0}; }

  /// Maps any angle into (-pi, pi].
  static double normalize(double angle) {
    double a = std::remainder(angle, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
  }

 private:
  Complex anchor_;
  double angle_;
  Complex direction_;
};

struct QuadratureSpec {
  double half_width = 6.0;  // integrate u in [-T, T]
  double step = 1.0 / 16.0;
  double tol = 1e-10;
  long max_nodes = 1 << 20;

  /// Number of trapezoid nodes on [-T, T] with step h.
  long node_count() const { return 2 * static_cast<long>(std::floor(half_width / step)) + 1; }

  void validate() const {
    if (!(half_width > 0.0)) throw DomainError("QuadratureSpec: half_width must be positive");
    if (!(step > 0.0)) throw DomainError("QuadratureSpec: step must be positive");
    if (!(tol > 0.0)) throw DomainError("QuadratureSpec: tol must be positive");
  }
};

/// Decay class an integrand is known to satisfy along its contour.
struct DecayClass {
  enum class Kind { Gaussian, Exponential };
  Kind kind;
  double rate;

  static DecayClass gaussian(double c) { return {Kind::Gaussian, c}; }
  static DecayClass exponential(double c) { return {Kind::Exponential, c}; }
};

/// Default trapezoid step for a target tolerance.
inline double default_step(double tol) { return tol >= 1e-8 ? 1.0 / 16.0 : 1.0 / 32.0; }

/// Truncation window and step for a decay class: Gaussian(c) keeps e^{-c T^2}
/// below tol with a margin of 2, Exponential(c) keeps e^{-c T} below tol with a
/// margin of 5. T is rounded up to a multiple of 1/4 so the h and 2h grids both
/// end on +-T.
inline QuadratureSpec choose_spec(DecayClass decay, double tol) {
  if (!(decay.rate > 0.0)) throw DomainError("choose_spec: decay rate must be positive");
  if (!(tol > 0.0)) throw DomainError("choose_spec: tol must be positive");
  const double log_inv = std::log(1.0 / std::min(tol, 0.5));
  double T = decay.kind == DecayClass::Kind::Gaussian ? std::sqrt(log_inv / decay.rate) + 2.0
                                                      : log_inv / decay.rate + 5.0;
  T = std::ceil(T * 4.0) / 4.0;
  QuadratureSpec spec;
  spec.half_width = T;
  spec.step = default_step(tol);
  spec.tol = tol;
  // Room for one step halving.
  spec.max_nodes = 2 * (2 * static_cast<long>(std::ceil(T / spec.step)) + 1);
  return spec;
}

template <class F>
concept ComplexIntegrand = requires(F f, Complex z) {
  { f(z) } -> std::convertible_to<Complex>;
};

namespace detail {

template <class Sample>
Complex trapezoid_pass(const Sample& sample, long first, long last, long stride) {
  CompensatedSum acc;
  for (long k = first; k <= last; k += stride) acc.add(sample(k));
  return acc.value();
}

}  // namespace detail

/// Trapezoid rule h * sum f(zeta(k h)) e^{i angle} over k h in [-T, T].
///
/// If the h/2h estimate misses spec.tol and the budget allows, the step is
/// halved once. Throws ConvergenceError when the first grid alone exceeds
/// spec.max_nodes and EvaluationError on a non-finite sample.
template <ComplexIntegrand F>
EvalResult integrate_line(F&& f, const LineContour& line, const QuadratureSpec& spec) {
  spec.validate();
  const double h = spec.step;
  const long n = static_cast<long>(std::floor(spec.half_width / h));
  const long nodes = 2 * n + 1;
  if (nodes > spec.max_nodes)
    throw ConvergenceError("integrate_line: " + std::to_string(nodes) +
                           " nodes exceed budget of " + std::to_string(spec.max_nodes));

  // Index k on the h/2 lattice, so k even are the h nodes.
  auto sample = [&](long k) -> Complex {
    const double u = 0.5 * h * static_cast<double>(k);
    const Complex v = f(line.at(u));
    if (!is_finite(v)) throw EvaluationError(k / 2, u);
    return v;
  };

  const Complex dir = line.direction();
  // Nodes with k/2 even form the 2h grid; both sums over one pass of the h grid.
  CompensatedSum all, coarse;
  for (long j = -n; j <= n; ++j) {
    const Complex v = sample(2 * j);
    all.add(v);
    if (j % 2 == 0) coarse.add(v);
  }
  Complex fine_value = h * dir * all.value();
  const Complex coarse_value = 2.0 * h * dir * coarse.value();

  auto relative = [](Complex a, Complex b) {
    const double d = std::abs(a - b);
    if (d == 0.0) return 0.0;
    const double s = std::abs(a);
    return s == 0.0 ? std::numeric_limits<double>::infinity() : d / s;
  };

  EvalResult out;
  out.value = fine_value;
  out.err_estimate = relative(fine_value, coarse_value);
  out.nodes = nodes;

  if (out.err_estimate > spec.tol && out.nodes + 2 * n <= spec.max_nodes) {
    const Complex mid = detail::trapezoid_pass(sample, -2 * n + 1, 2 * n - 1, 2);
    const Complex half_value = 0.5 * fine_value + 0.5 * h * dir * mid;
    out.err_estimate = relative(half_value, fine_value);
    out.value = half_value;
    out.nodes += 2 * n;
  }
  out.degraded = out.err_estimate > spec.tol;
  return out;
}

/// Integral over the real line (anchor 0, angle 0).
template <ComplexIntegrand F>
EvalResult integrate_real_line(F&& f, const QuadratureSpec& spec) {
  return integrate_line(std::forward<F>(f), LineContour::real_line(), spec);
}

/// Picks a window from a log-magnitude envelope: scans outward from u = 0 in
/// both directions until log|f| falls `drop` below its running maximum.
/// Used where the decay is Gaussian but shifted by linear terms.
template <class LogMagnitude>
QuadratureSpec spec_from_envelope(LogMagnitude&& log_mag, double tol, double drop,
                                  double scan_step = 0.25, double max_half_width = 200.0) {
  double peak = log_mag(0.0);
  double reach = 0.0;
  for (int side : {-1, 1}) {
    double u = 0.0;
    double last_above = 0.0;
    while (u < max_half_width) {
      u += scan_step;
      const double lm = log_mag(side * u);
      if (lm > peak) peak = lm;
      if (lm > peak - drop) last_above = u;
      if (u - last_above > 4.0) break;
    }
    reach = std::max(reach, last_above);
  }
  QuadratureSpec spec;
  spec.half_width = std::ceil((reach + 1.0) * 4.0) / 4.0;
  spec.step = default_step(tol);
  spec.tol = tol;
  spec.max_nodes = 2 * (2 * static_cast<long>(std::ceil(spec.half_width / spec.step)) + 1);
  return spec;
}

}  // namespace auxr
