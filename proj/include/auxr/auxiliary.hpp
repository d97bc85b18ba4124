#pragma once

// The Riemann auxiliary function R(s) by three integral representations, the
// sinc-integral and Hermite contour-integral identities used to connect them,
// and a cross-check report over the representations.
//
//   Definition   R(s) = int_{0 \swarrow 1} x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}) dx
//   HermiteForm  R(s) = -2^s pi^{s/2} e^{pi i s/4}
//                       int_R e^{-pi x^2} H_{-s}(x sqrt(pi)) / (1 + e^{-2 pi omega x}) dx
//   GabckeUForm  R(s) = 2^{s/2} pi^{s/2} e^{pi i (s-1)/4}
//                       int_{-1/2 \searrow 1/2} e^{-pi i u^2/2 + pi i u} / (2i cos pi u)
//                       U(s - 1/2, sqrt(2 pi) e^{pi i/4} u) du

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "auxr/core.hpp"
#include "auxr/hermite.hpp"
#include "auxr/quadrature.hpp"

namespace auxr {

enum class RMethod { Definition, HermiteForm, GabckeUForm };

inline const char* to_string(RMethod m) {
  switch (m) {
    case RMethod::Definition: return "Definition";
    case RMethod::HermiteForm: return "HermiteForm";
    case RMethod::GabckeUForm: return "GabckeUForm";
  }
  return "?";
}

/// R-evaluation result; hermite_degraded counts grid samples whose special-function
/// error is large enough to matter at the requested tolerance.
struct REvalResult : EvalResult {
  long hermite_degraded = 0;
};

namespace detail {

// 1 / (1 + e^{-w}) without overflow for large |Re w|.
inline Complex logistic(Complex w) {
  if (w.real() >= 0.0) return 1.0 / (1.0 + std::exp(-w));
  const Complex e = std::exp(w);
  return e / (e + 1.0);
}

// Tolerance handed to quadrature after accounting for e^{c |t|} growth of the
// integrand relative to R(s).
inline double amplified_tol(double tol, double t, double growth_per_t) {
  return std::max(tol * std::exp(-growth_per_t * std::abs(t)), 1e-300);
}

}  // namespace detail

/// The contour x = 1/2 - omega u of the defining integral.
inline LineContour definition_contour(double anchor = 0.5) { return {anchor, -3.0 * kPi / 4.0}; }

/// Quadrature window for the defining integral: Gaussian(pi) decay, with the
/// tolerance tightened by the e^{(3 pi / 4)|t|} swing of |x^{-s}| along the line.
inline QuadratureSpec definition_spec(Complex s, double tol = 1e-12) {
  QuadratureSpec spec =
      choose_spec(DecayClass::gaussian(kPi), detail::amplified_tol(tol * 1e-3, s.imag(), 0.75 * kPi));
  spec.tol = tol;
  return spec;
}

/// R(s) from its defining integral along x = anchor - omega u (anchor in (0,1)).
inline REvalResult r_definition(Complex s, const QuadratureSpec& spec, double anchor = 0.5) {
  if (!(anchor > 0.0 && anchor < 1.0))
    throw DomainError("r_definition: the line must cross the real axis inside (0, 1)");
  auto integrand = [s](Complex x) -> Complex {
    const Complex log_x = std::log(x);
    const Complex base = -s * log_x + kI * kPi * x * x;
    // 1 / (e^{pi i x} - e^{-pi i x}) folded into the exponent on the side where it decays.
    if (x.imag() <= 0.0)
      return std::exp(base - kI * kPi * x) / (1.0 - std::exp(-2.0 * kI * kPi * x));
    return std::exp(base + kI * kPi * x) / (std::exp(2.0 * kI * kPi * x) - 1.0);
  };
  REvalResult out;
  static_cast<EvalResult&>(out) = integrate_line(integrand, definition_contour(anchor), spec);
  return out;
}

inline REvalResult r_definition(Complex s, double tol = 1e-12) {
  return r_definition(s, definition_spec(s, tol));
}

/// Quadrature window for the Hermite form: exponential decay at rate sqrt(2) pi
/// on the negative axis, tightened by the e^{pi |t| / 2} size of H_{-s} there.
inline QuadratureSpec hermite_form_spec(Complex s, double tol = 1e-12) {
  QuadratureSpec spec = choose_spec(DecayClass::exponential(kSqrt2 * kPi),
                                    detail::amplified_tol(tol * 1e-3, s.imag(), 0.5 * kPi));
  spec.tol = tol;
  return spec;
}

namespace detail {

// Per-sample |f| * (relative error of the special function inside f). After
// the quadrature, a sample counts as degraded when its share of the absolute
// error exceeds tol * |integral| / samples.
class ErrorLedger {
 public:
  void record(double magnitude, double rel_err) { contrib_.push_back(magnitude * rel_err); }

  void apply(REvalResult& out, double step, double tol) const {
    const double mag = std::abs(out.value);
    double total = 0.0;
    for (double c : contrib_) total += c;
    total *= step;
    const double n = static_cast<double>(std::max<std::size_t>(contrib_.size(), 1));
    const double per_node = tol * mag / n;
    out.hermite_degraded = 0;
    for (double c : contrib_)
      if (c * step > per_node) ++out.hermite_degraded;
    if (mag > 0.0) out.err_estimate = std::max(out.err_estimate, total / mag);
    out.degraded = out.err_estimate > tol;
  }

 private:
  std::vector<double> contrib_;
};

// e^{-pi x^2} H_{-s}(x sqrt pi) / (1 + e^{-2 pi omega x}) at complex x.
class HermiteFormIntegrand {
 public:
  HermiteFormIntegrand(Complex s, double tol, HermiteOptions opt, ErrorLedger& ledger)
      : nu_(-s), tol_(tol), opt_(opt), ledger_(&ledger) {}

  Complex operator()(Complex x) const {
    // e^{-pi x^2} H(x sqrt pi) = e^{-Z^2} H(Z) with Z = x sqrt pi.
    const HermiteResult h = hermite_scaled(nu_, x * kSqrtPi, HermiteMethod::Auto, tol_, opt_);
    const Complex v = h.value * logistic(2.0 * kPi * kOmega * x);
    ledger_->record(std::abs(v), h.err_estimate);
    return v;
  }

 private:
  Complex nu_;
  double tol_;
  HermiteOptions opt_;
  ErrorLedger* ledger_;
};

}  // namespace detail

/// The prefactors -2^s pi^{s/2} e^{pi i s/4} and 2^{s/2} pi^{s/2} e^{pi i (s-1)/4}.
inline Complex hermite_form_prefactor(Complex s) {
  return -std::exp(s * kLn2 + s * (kLnPi / 2.0) + kI * kPi * s / 4.0);
}
inline Complex gabcke_prefactor(Complex s) {
  return std::exp(s * (kLn2 / 2.0) + s * (kLnPi / 2.0) + kI * kPi * (s - 1.0) / 4.0);
}

/// R(s) by the Hermite-function integral over the real line.
inline REvalResult r_hermite(Complex s, const QuadratureSpec& spec, const HermiteOptions& opt = {}) {
  detail::ErrorLedger ledger;
  detail::HermiteFormIntegrand integrand(s, std::min(spec.tol, 1e-10) * 1e-2, opt, ledger);
  REvalResult out;
  static_cast<EvalResult&>(out) = integrate_real_line(integrand, spec);
  ledger.apply(out, spec.step, spec.tol);
  out.value *= hermite_form_prefactor(s);
  return out;
}

inline REvalResult r_hermite(Complex s, double tol = 1e-12) {
  return r_hermite(s, hermite_form_spec(s, tol));
}

/// The -1/2 \searrow 1/2 line u = anchor + e^{-i pi/4} v.
inline LineContour gabcke_contour(double anchor = 0.0) { return {anchor, -kPi / 4.0}; }

/// On the Gabcke line the integrand decays like the Hermite form in v.
inline QuadratureSpec gabcke_spec(Complex s, double tol = 1e-12) { return hermite_form_spec(s, tol); }

/// R(s) by the parabolic-cylinder integral along u = anchor + e^{-i pi/4} v,
/// anchor in (-1/2, 1/2).
inline REvalResult r_gabcke_u(Complex s, const QuadratureSpec& spec, double anchor = 0.0,
                              const HermiteOptions& opt = {}) {
  if (!(anchor > -0.5 && anchor < 0.5))
    throw DomainError("r_gabcke_u: the line must cross the real axis inside (-1/2, 1/2)");
  const Complex a = s - 0.5;
  const Complex xi_scale = std::sqrt(2.0 * kPi) * kOmega;
  const double htol = std::min(spec.tol, 1e-10) * 1e-2;
  detail::ErrorLedger ledger;
  auto integrand = [&](Complex u) -> Complex {
    const Complex xi = xi_scale * u;
    // U(a, xi) = mantissa * e^{xi^2/4}; e^{xi^2/4 - pi i u^2/2} is identically 1 on
    // exact arithmetic, kept for fidelity off the anchor-0 line.
    const detail::SplitValue uval = detail::parabolic_u_split(a, xi, htol, opt);
    const Complex gauss = std::exp(uval.exponent - kI * kPi * u * u / 2.0);
    // e^{pi i u} / (2i cos pi u) = 1 / (i (1 + e^{-2 pi i u})).
    const Complex trig = -kI * detail::logistic(2.0 * kPi * kI * u);
    const Complex v = uval.mantissa.value * gauss * trig;
    ledger.record(std::abs(v), uval.mantissa.err_estimate);
    return v;
  };
  REvalResult out;
  static_cast<EvalResult&>(out) = integrate_line(integrand, gabcke_contour(anchor), spec);
  ledger.apply(out, spec.step, spec.tol);
  out.value *= gabcke_prefactor(s);
  return out;
}

inline REvalResult r_gabcke_u(Complex s, double tol = 1e-12) {
  return r_gabcke_u(s, gabcke_spec(s, tol));
}

/// Caps every quadrature budget (outer and Hermite) at max_nodes when positive.
struct NodeCap {
  long max_nodes = 0;

  QuadratureSpec apply(QuadratureSpec spec) const {
    if (max_nodes > 0) spec.max_nodes = std::min(spec.max_nodes, max_nodes);
    return spec;
  }
  HermiteOptions apply(HermiteOptions opt) const {
    opt.integral = apply(opt.integral);
    return opt;
  }
};

inline REvalResult evaluate_r(RMethod method, Complex s, double tol = 1e-12, NodeCap cap = {}) {
  const HermiteOptions opt = cap.apply(HermiteOptions{});
  switch (method) {
    case RMethod::Definition: return r_definition(s, cap.apply(definition_spec(s, tol)));
    case RMethod::HermiteForm: return r_hermite(s, cap.apply(hermite_form_spec(s, tol)), opt);
    case RMethod::GabckeUForm: return r_gabcke_u(s, cap.apply(gabcke_spec(s, tol)), 0.0, opt);
  }
  throw DomainError("unknown RMethod");
}

// ---------------------------------------------------------------------------
// Sinc integral: int_L e^{-z zeta} / (1 + e^{-zeta}) d zeta = pi / sin(pi z),
// L the line through 0 in direction e^{i pi/4}, for 0 < Re z - Im z < 1.

inline LineContour sinc_contour() { return {0.0, kPi / 4.0}; }

inline void check_sinc_strip(Complex z) {
  const double gap = z.real() - z.imag();
  if (!(gap > 0.0 && gap < 1.0))
    throw DomainError("sinc identity requires 0 < Re z - Im z < 1");
}

/// Exponential decay rates along the line are Re(omega z) and 1/sqrt 2 - Re(omega z).
inline QuadratureSpec sinc_spec(Complex z, double tol = 1e-12) {
  check_sinc_strip(z);
  const double alpha = (kOmega * z).real();
  const double rate = std::min(alpha, 1.0 / kSqrt2 - alpha);
  QuadratureSpec spec = choose_spec(DecayClass::exponential(rate), tol * 1e-3);
  spec.step = 1.0 / 16.0;
  spec.tol = tol;
  spec.max_nodes = std::max<long>(spec.max_nodes, 2 * spec.node_count());
  return spec;
}

inline EvalResult sinc_lemma_lhs(Complex z, const QuadratureSpec& spec) {
  check_sinc_strip(z);
  auto integrand = [z](Complex zeta) -> Complex {
    if (zeta.real() >= 0.0) return std::exp(-z * zeta) / (1.0 + std::exp(-zeta));
    return std::exp((1.0 - z) * zeta) / (std::exp(zeta) + 1.0);
  };
  return integrate_line(integrand, sinc_contour(), spec);
}

inline Complex sinc_lemma_rhs(Complex z) { return kPi / sin_pi(z); }

/// Relative difference between the line integral and pi / sin(pi z).
inline double sinc_lemma_residual(Complex z, const QuadratureSpec& spec) {
  const Complex lhs = sinc_lemma_lhs(z, spec).value;
  const Complex rhs = sinc_lemma_rhs(z);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

inline double sinc_lemma_residual(Complex z, double tol = 1e-12) {
  return sinc_lemma_residual(z, sinc_spec(z, tol));
}

// ---------------------------------------------------------------------------
// Hermite contour integral: int_{0 \uparrow} x^s e^{x^2/4 - xz} dx = 2i sqrt(pi) e^{-z^2} H_s(z)
// along any line of direction e^{i theta}, pi/4 < theta < 3 pi/4, crossing the
// positive real axis.

inline void check_prop_angle(double angle) {
  if (!(angle > kPi / 4.0 && angle < 3.0 * kPi / 4.0))
    throw DomainError("contour direction must satisfy pi/4 < angle < 3 pi/4");
}

namespace detail {

inline double prop_log_magnitude(Complex s, Complex z, Complex x) {
  return (s * std::log(x) + x * x / 4.0 - x * z).real();
}

}  // namespace detail

/// Where the line of direction `angle` crosses the positive real axis. Among
/// 1, the crossings of the lines through the saddles x = z +- sqrt(z^2 - 2s)
/// and a dyadic ladder, picks the one with the smallest peak |integrand|;
/// the integral is the same for all of them, so a low peak means little
/// cancellation. Lines passing closer than 1/4 to the branch point at 0 are
/// excluded, since the trapezoid rule converges like e^{-2 pi d / h}.
inline double prop_anchor(Complex s, Complex z, double angle) {
  check_prop_angle(angle);
  const double a_min = 0.25 / std::sin(angle);
  std::vector<double> candidates = {1.0};
  const Complex root = std::sqrt(z * z - 2.0 * s);
  for (Complex xs : {z + root, z - root}) {
    const double a = xs.real() - xs.imag() / std::tan(angle);
    if (std::isfinite(a)) candidates.push_back(std::max(a, a_min));
  }
  for (double a = 0.125; a <= 32.0; a *= 2.0)
    if (a >= a_min) candidates.push_back(a);
  double best_anchor = 1.0;
  double best_peak = std::numeric_limits<double>::infinity();
  for (double a : candidates) {
    const LineContour line(a, angle);
    double peak = -std::numeric_limits<double>::infinity();
    for (double u = -80.0; u <= 80.0; u += 0.125)
      peak = std::max(peak, detail::prop_log_magnitude(s, z, line.at(u)));
    if (peak < best_peak - 1e-9) best_peak = peak, best_anchor = a;
  }
  return best_anchor;
}

inline QuadratureSpec prop_spec(Complex s, Complex z, double angle, double tol, double anchor) {
  check_prop_angle(angle);
  const LineContour line(anchor, angle);
  auto log_mag = [&](double u) { return detail::prop_log_magnitude(s, z, line.at(u)); };
  return spec_from_envelope(log_mag, tol, std::log(1.0 / tol) + 12.0);
}

inline QuadratureSpec prop_spec(Complex s, Complex z, double angle, double tol = 1e-12) {
  return prop_spec(s, z, angle, tol, prop_anchor(s, z, angle));
}

inline EvalResult prop_inth_lhs(Complex s, Complex z, double angle, const QuadratureSpec& spec,
                                double anchor) {
  check_prop_angle(angle);
  if (!(anchor > 0.0)) throw DomainError("contour must cross the positive real axis");
  // The peak of |integrand| can exceed the result by 1e6 or more, and the
  // logarithmic derivative is O(|z| + |x|), so rounding x itself to double
  // already costs digits. Integrate in the line parameter u (exact on the
  // trapezoid lattice) and form x and the exponent in extended precision.
  using Wide = std::complex<long double>;
  const Wide ws(s), wz(z), wa(anchor);
  const Wide dir = std::polar(1.0L, static_cast<long double>(LineContour::normalize(angle)));
  auto integrand = [=](Complex u) -> Complex {
    const Wide wx = wa + dir * static_cast<long double>(u.real());
    const Wide e = dir * std::exp(ws * std::log(wx) + wx * wx / 4.0L - wx * wz);
    return {static_cast<double>(e.real()), static_cast<double>(e.imag())};
  };
  return integrate_real_line(integrand, spec);
}

inline EvalResult prop_inth_lhs(Complex s, Complex z, double angle, double tol = 1e-12) {
  const double anchor = prop_anchor(s, z, angle);
  return prop_inth_lhs(s, z, angle, prop_spec(s, z, angle, tol, anchor), anchor);
}

/// 2i sqrt(pi) e^{-z^2} H_s(z).
inline Complex prop_inth_rhs(Complex s, Complex z, double tol = 1e-13) {
  return 2.0 * kI * kSqrtPi * hermite_scaled(s, z, HermiteMethod::Auto, tol).value;
}

inline double prop_inth_residual(Complex s, Complex z, double angle, const QuadratureSpec& spec,
                                 double anchor) {
  const Complex lhs = prop_inth_lhs(s, z, angle, spec, anchor).value;
  const Complex rhs = prop_inth_rhs(s, z);
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

inline double prop_inth_residual(Complex s, Complex z, double angle, double tol = 1e-12) {
  const double anchor = prop_anchor(s, z, angle);
  return prop_inth_residual(s, z, angle, prop_spec(s, z, angle, tol, anchor), anchor);
}

// ---------------------------------------------------------------------------

struct CrossCheckEntry {
  std::optional<REvalResult> result;
  std::string error;
};

struct CrossCheckReport {
  Complex s;
  std::map<RMethod, CrossCheckEntry> values;
  double max_pairwise_rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Evaluates R(s) by each method and compares all pairs. A method that throws is
/// recorded in its entry and makes the report fail.
inline CrossCheckReport crosscheck(Complex s, const std::set<RMethod>& methods, double tol,
                                   NodeCap cap = {}) {
  if (methods.size() < 2) throw std::invalid_argument("crosscheck needs at least two methods");
  CrossCheckReport report;
  report.s = s;
  report.tol = tol;
  const double quad_tol = std::min(tol * 1e-4, 1e-10);
  bool all_ok = true;
  for (RMethod m : methods) {
    CrossCheckEntry entry;
    try {
      entry.result = evaluate_r(m, s, quad_tol, cap);
    } catch (const std::exception& e) {
      entry.error = e.what();
      all_ok = false;
    }
    report.values.emplace(m, std::move(entry));
  }
  for (auto a = report.values.begin(); a != report.values.end(); ++a) {
    if (!a->second.result) continue;
    for (auto b = std::next(a); b != report.values.end(); ++b) {
      if (!b->second.result) continue;
      report.max_pairwise_rel_err = std::max(
          report.max_pairwise_rel_err, rel_diff(a->second.result->value, b->second.result->value));
    }
  }
  report.pass = all_ok && report.max_pairwise_rel_err <= tol;
  return report;
}

}  // namespace auxr
