#pragma once

// Hermite functions H_nu(z) of complex order and argument, and the parabolic
// cylinder function U(a, z) = D_{-a-1/2}(z).
//
// Three evaluation routes:
//   Series          power series with the 1/(2 Gamma(-nu)) prefactor, entire in nu
//   IntegralRep     (1/Gamma(-nu)) int_0^inf e^{-t^2-2tz} t^{-nu-1} dt, Re nu < 0
//   RecurrenceLift  H_{mu+1} = 2z H_mu - 2mu H_{mu-1} from two IntegralRep bases
//
// Every route can return the exponentially scaled value e^{-z^2} H_nu(z), which
// stays representable where H_nu itself overflows (large negative real z).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>
#include <string>
#include <vector>

#include "auxr/core.hpp"
#include "auxr/double_double.hpp"
#include "auxr/gamma.hpp"
#include "auxr/quadrature.hpp"

namespace auxr {

enum class HermiteMethod { Series, IntegralRep, RecurrenceLift, Reflection, Auto };

inline const char* to_string(HermiteMethod m) {
  switch (m) {
    case HermiteMethod::Series: return "Series";
    case HermiteMethod::IntegralRep: return "IntegralRep";
    case HermiteMethod::RecurrenceLift: return "RecurrenceLift";
    case HermiteMethod::Reflection: return "Reflection";
    case HermiteMethod::Auto: return "Auto";
  }
  return "?";
}

struct HermiteResult : EvalResult {
  HermiteMethod method = HermiteMethod::Auto;
  /// Largest intermediate magnitude over the result magnitude.
  double cancellation = 1.0;
};

struct HermiteOptions {
  double z_switch = 3.0;
  /// Auto abandons the series above this cancellation ratio.
  double cancellation_limit = 1e12;
  int series_max_terms = 2000;
  /// step: trapezoid step in the log variable; half_width: longest window
  /// (in the log variable) before giving up; max_nodes: node budget.
  QuadratureSpec integral{12.0, 1.0 / 32.0, 1e-13, 4000};
  /// Auto retries a degraded result through the reflection formula, then
  /// through the integral on a bent path.
  bool fallbacks = true;
};

namespace detail {

// Relative error of the double-precision prefactor sqrt(pi) 2^nu / Gamma(.).
inline constexpr double kSeriesPrefactorErr = 1e-14;

inline bool is_nonnegative_integer(Complex nu) {
  return nu.imag() == 0.0 && nu.real() >= 0.0 && std::floor(nu.real()) == nu.real();
}

// Gamma(x + 1/2) / Gamma(x) in double-double: upward shift until Re x >= 40,
// then sqrt(y) exp(sum d_k y^{-k}) with d_k = (-1)^{k+1} (B_{k+1}(1/2) - B_{k+1}) / (k(k+1)).
inline dd::Complex gamma_half_ratio(Complex x) {
  static constexpr std::array<std::array<double, 2>, 11> kCoef = {{
      {-0.125, 0.0},
      {0.005208333333333333, 2.8912057932946783e-19},
      {-0.0015625, 8.673617379884036e-20},
      {0.0011858258928571428, 9.29316147844718e-20},
      {-0.001681857638888889, 9.637352644315594e-20},
      {0.0038341175426136365, -1.182766006347823e-19},
      {-0.012819730318509616, 5.337610695313253e-19},
      {0.059100405375162764, -3.23815048849004e-18},
      {-0.359287374159869, -2.6122894697062506e-17},
      {2.784861777958117, 1.8698493046318425e-16},
      {-26.80572169735318, 1.691768418476429e-16},
  }};
  const int shift = std::max(0, static_cast<int>(std::ceil(40.0 - x.real())));
  dd::Complex prod(dd::Real(1.0));
  const dd::Complex xd(x);
  for (int k = 0; k < shift; ++k) {
    const dd::Complex a = xd + dd::Complex(dd::Real(static_cast<double>(k)));
    const dd::Complex b = xd + dd::Complex(dd::Real(static_cast<double>(k) + 0.5));
    prod = prod * a / b;
  }
  const dd::Complex y = xd + dd::Complex(dd::Real(static_cast<double>(shift)));
  const dd::Complex inv = dd::Complex(dd::Real(1.0)) / y;
  const dd::Complex inv2 = inv * inv;
  dd::Complex pw = inv;
  dd::Complex acc;
  for (const auto& c : kCoef) {
    acc = acc + pw * dd::Complex(dd::Real(c[0], c[1]));
    pw = pw * inv2;
  }
  return prod * dd::sqrt(y) * dd::exp_small(acc);
}

inline HermiteResult series_impl(Complex nu, Complex z, double tol, int max_terms, bool scaled) {
  if (!(tol > 0.0)) throw DomainError("hermite_series: tol must be positive");
  // H_nu(z) = sqrt(pi) 2^nu [A E(z) + B O(z)], A = 1/Gamma(x + 1/2), B = 1/Gamma(x),
  // x = -nu/2, where E and O collect the even and odd powers of the series
  // (duplication formula applied to Gamma((n-nu)/2) / (2 Gamma(-nu))). The two
  // halves can cancel by many digits, so the sums and the ratio B/A are carried
  // in double-double.
  const Complex x = -nu / 2.0;
  const Complex a_lead = recip_gamma(x + 0.5);
  Complex lead;
  dd::Complex even_weight, odd_weight;
  if (a_lead != 0.0) {
    lead = a_lead;
    even_weight = dd::Complex(dd::Real(1.0));
    odd_weight = gamma_half_ratio(x);
  } else {
    lead = recip_gamma(x);
    odd_weight = dd::Complex(dd::Real(1.0));
  }

  const dd::Complex zd(z);
  const dd::Complex z2x4 = zd * zd * 4.0;
  const dd::Complex minus_nu_half(x);
  std::array<dd::Complex, 2> raw{dd::Complex(dd::Real(1.0)), zd * -2.0};
  std::array<dd::Complex, 2> weight{even_weight, odd_weight};

  const double trunc_tol = std::min(tol, 1e-24);
  dd::Complex sum;
  double max_partial = 0.0;
  double tail_max = 0.0;
  int quiet = 0;
  int n = 0;
  for (; n < max_terms; ++n) {
    dd::Complex& r = raw[n % 2];
    const dd::Complex t = r * weight[n % 2];
    sum = sum + t;
    const double partial = sum.abs();
    max_partial = std::max(max_partial, partial);
    const double mag = t.abs();
    if (!std::isfinite(mag) || !std::isfinite(partial))
      throw ConvergenceError("hermite_series: overflow at term " + std::to_string(n));
    if (mag <= trunc_tol * max_partial) {
      tail_max = std::max(tail_max, mag);
      if (++quiet >= 30) break;
    } else {
      quiet = 0;
      tail_max = 0.0;
    }
    const double nd = static_cast<double>(n);
    r = r * (minus_nu_half + dd::Complex(dd::Real(nd / 2.0))) * z2x4 / ((nd + 1.0) * (nd + 2.0));
  }
  if (n >= max_terms)
    throw ConvergenceError("hermite_series: no convergence within " + std::to_string(max_terms) +
                           " terms");

  Complex log_scale = nu * kLn2 + 0.5 * kLnPi;
  if (scaled) log_scale -= z * z;
  HermiteResult out;
  const Complex s = sum.to_complex();
  out.value = std::exp(log_scale) * lead * s;
  out.method = HermiteMethod::Series;
  out.nodes = n + 1;
  const double mag = std::abs(s);
  out.cancellation = mag > 0.0 ? max_partial / mag : std::numeric_limits<double>::infinity();
  if (max_partial == 0.0) out.cancellation = 1.0;
  const double trunc = mag > 0.0 ? tail_max / mag : 0.0;
  out.err_estimate = std::max({kSeriesPrefactorErr, out.cancellation * 1e-30, trunc});
  out.degraded = out.err_estimate > tol;
  return out;
}

// Trapezoid on t = e^{w + i phi(w)}. On a straight ray phi is constant; a bent
// path leaves 0 at angle phi1 and turns to phi_inf around w = wc,
//   phi(w) = phi_inf + (phi1 - phi_inf) / (1 + e^{(w - wc)/b}),
// which lets the contour pass near a saddle that no admissible ray reaches.
// Angles stay inside (-pi, pi), so the path never meets the cut of t^{-nu-1}.
// The path is picked to minimize the peak of |integrand| (the cancellation);
// the grid runs to -infinity, with the part left of w0 summed in closed form
// from the Taylor series e^{-t^2 - 2tz} = sum_m H_m(-z) t^m / m!.
class IntegralRepEvaluator {
 public:
  struct Path {
    double phi1 = 0.0;
    double phi_inf = 0.0;
    double wc = 0.0;
    bool bent = false;
  };

  IntegralRepEvaluator(Complex nu, Complex z, bool scaled, bool bent = false)
      : nu_(nu), z_(z), scaled_(scaled) {
    w0_ = default_w0();
    shift_ = scaled ? -z * z : Complex{0.0};
    if (bent) {
      choose_bent_path();
      // Far enough left that phi(w) equals phi1 to double precision.
      w0_ = std::min(w0_, path_.wc - 40.0 * kBend);
    } else {
      choose_angle();
    }
  }

  const Path& path() const { return path_; }

  HermiteResult run(const QuadratureSpec& spec) {
    spec.validate();
    const double h = spec.step;
    const long max_steps =
        static_cast<long>(std::ceil((spec.half_width + default_w0() - w0_) / h));
    // Not before the bend is done and the far-field Gaussian has peaked.
    const double w_settle =
        std::max(path_.bent ? path_.wc + 6.0 * kBend : w0_, std::log(far_peak(path_).first + 1e-300));
    CompensatedSum all, coarse;
    double l1 = 0.0;
    double env_max = -std::numeric_limits<double>::infinity();
    long k = 0;
    for (;; ++k) {
      if (k > max_steps || k + 1 > spec.max_nodes)
        throw ConvergenceError("hermite_integral: window/budget exhausted");
      const double w = w0_ + h * static_cast<double>(k);
      const Complex g = sample(w);
      all.add(g);
      if (k % 2 == 0) coarse.add(g);
      l1 += std::abs(g);
      const double env = log_envelope(w, path_);
      env_max = std::max(env_max, env);
      if (env < env_max - 41.0 && w > w_settle) break;
    }
    const long last = k;
    const Complex tail_h = tail_sum(h);
    Complex fine = h * (all.value() + tail_h);
    const Complex crude = 2.0 * h * (coarse.value() + tail_sum(2.0 * h));
    l1 = h * (l1 + std::abs(tail_h));

    auto relative = [](Complex a, Complex b) {
      const double d = std::abs(a - b);
      if (d == 0.0) return 0.0;
      return std::abs(a) > 0.0 ? d / std::abs(a) : std::numeric_limits<double>::infinity();
    };
    double err = relative(fine, crude);
    long nodes = last + 1;
    if (err > spec.tol && 2 * nodes <= spec.max_nodes) {
      CompensatedSum mid;
      for (long j = 0; j < last; ++j) mid.add(sample(w0_ + h * (static_cast<double>(j) + 0.5)));
      const double hh = 0.5 * h;
      const Complex half = hh * (all.value() + mid.value() + tail_sum(hh));
      err = relative(half, fine);
      fine = half;
      nodes += last;
    }

    HermiteResult out;
    const Complex prefactor = recip_gamma(-nu_);
    out.value = prefactor * fine;
    out.method = HermiteMethod::IntegralRep;
    out.nodes = nodes;
    const double mag = std::abs(fine);
    out.cancellation = mag > 0.0 ? l1 / mag : std::numeric_limits<double>::infinity();
    out.err_estimate = std::max(err, out.cancellation * kEps);
    out.degraded = out.err_estimate > spec.tol;
    if (!is_finite(out.value)) throw ConvergenceError("hermite_integral: non-finite result");
    return out;
  }

 private:
  static constexpr double kStripMargin = 0.3;
  static constexpr double kBend = 0.5;
  static constexpr double kMaxBentAngle = 2.8;

  double default_w0() const { return std::log(0.25 / (1.0 + std::abs(z_))); }

  static double phi_at(double w, const Path& p) {
    if (!p.bent) return p.phi1;
    const double x = (w - p.wc) / kBend;
    const double sig = x > 0.0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
    return p.phi_inf + (p.phi1 - p.phi_inf) * sig;
  }

  static double dphi_at(double w, const Path& p) {
    if (!p.bent) return 0.0;
    const double x = (w - p.wc) / kBend;
    const double e = std::exp(-std::abs(x));
    const double sig_prime = -e / ((1.0 + e) * (1.0 + e));
    return (p.phi1 - p.phi_inf) * sig_prime / kBend;
  }

  Complex exponent(double w) const {
    const Complex log_t{w, phi_at(w, path_)};
    const Complex t = std::exp(log_t);
    const Complex quad = scaled_ ? -(t + z_) * (t + z_) : -t * (t + 2.0 * z_);
    Complex e = quad - nu_ * log_t;
    if (path_.bent) e += std::log(Complex{1.0, dphi_at(w, path_)});
    return e;
  }

  Complex sample(double w) const { return std::exp(exponent(w)); }

  // log |integrand| at w, up to the constant Re(shift).
  double log_envelope(double w, const Path& p) const {
    const double phi = phi_at(w, p);
    const double r = std::exp(w);
    const Complex zr = z_ * std::polar(1.0, phi);
    double e = -r * r * std::cos(2.0 * phi) - 2.0 * r * zr.real() - nu_.real() * w + nu_.imag() * phi;
    if (p.bent) {
      const double d = dphi_at(w, p);
      e += 0.5 * std::log1p(d * d);
    }
    return e;
  }

  // Far from 0 the envelope is -r^2 cos(2 phi_inf) - 2 r Re(z e^{i phi_inf}) plus
  // logarithmic terms; returns the radius of its peak (0 if none) and the value there.
  std::pair<double, double> far_peak(const Path& p) const {
    const double phi = p.bent ? p.phi_inf : p.phi1;
    const double b = (z_ * std::polar(1.0, phi)).real();
    const double c = std::cos(2.0 * phi);
    if (b >= 0.0) return {0.0, -std::numeric_limits<double>::infinity()};
    const double r = -b / c;
    return {r, b * b / c - nu_.real() * std::log(r) + nu_.imag() * phi};
  }

  double peak_envelope(const Path& p, double w_start, double step) const {
    double best = std::max(log_envelope(w_start, p), far_peak(p).second);
    for (double w = w_start + step; w < w_start + 40.0; w += step) {
      const double e = log_envelope(w, p);
      best = std::max(best, e);
      if (e < best - 41.0) break;
    }
    return best;
  }

  void choose_angle() {
    const double phi_max = kPi / 4.0 - kStripMargin;
    constexpr int kCandidates = 8;
    std::array<double, 2 * kCandidates + 1> score{};
    double best = std::numeric_limits<double>::infinity();
    for (int j = -kCandidates; j <= kCandidates; ++j) {
      score[j + kCandidates] = peak_envelope({phi_max * j / kCandidates}, w0_, 0.25);
      best = std::min(best, score[j + kCandidates]);
    }
    // Smallest |phi| within half an e-fold of the best peak keeps the widest strip.
    for (int a = 0; a <= kCandidates; ++a) {
      for (int j : {a, -a}) {
        if (score[j + kCandidates] <= best + 0.5) {
          path_ = {phi_max * j / kCandidates};
          return;
        }
      }
    }
  }

  // Saddles of -t^2 - 2tz - (nu + 1) log t seed the search over (phi1, wc);
  // phi_inf is refined afterwards.
  void choose_bent_path() {
    const Complex root = std::sqrt(z_ * z_ - 2.0 * (nu_ + 1.0));
    std::vector<double> phis, wcs = {-1.0, 0.0, 1.0};
    for (Complex ts : {(-z_ + root) / 2.0, (-z_ - root) / 2.0}) {
      if (std::abs(ts) == 0.0) continue;
      phis.push_back(std::clamp(std::arg(ts), -kMaxBentAngle, kMaxBentAngle));
      for (double off : {0.0, 0.5, 1.0}) wcs.push_back(std::log(std::abs(ts)) + off);
    }
    for (int j = -7; j <= 7; ++j) phis.push_back(0.4 * j);

    auto score = [&](const Path& p) {
      return peak_envelope(p, std::min(w0_, p.wc - 8.0), 0.5);
    };
    Path best{0.0, 0.0, 0.0, true};
    double best_score = std::numeric_limits<double>::infinity();
    for (double phi1 : phis)
      for (double wc : wcs) {
        const Path p{phi1, 0.0, wc, true};
        const double sc = score(p);
        if (sc < best_score) best_score = sc, best = p;
      }
    const double phi_max = kPi / 4.0 - kStripMargin;
    for (double phi_inf : {-phi_max, -phi_max / 2.0, phi_max / 2.0, phi_max}) {
      Path p = best;
      p.phi_inf = phi_inf;
      const double sc = score(p);
      if (sc < best_score - 0.5) best_score = sc, best = p;
    }
    path_ = best;
  }

  // h * sum_{k >= 1} G(w0 - k h) = h * sum_m c_m t0^{m - nu} q_m / (1 - q_m).
  Complex tail_sum(double step) const {
    const Complex log_t0{w0_, phi_at(w0_, path_)};
    const Complex t0 = std::exp(log_t0);
    const Complex y = -z_;
    Complex c_prev = 0.0, c = 1.0;  // H_m(y) / m!
    Complex power = 1.0;            // t0^m
    CompensatedSum acc;
    int small = 0;
    for (int m = 0; m < 400; ++m) {
      const Complex e = static_cast<double>(m) - nu_;
      const Complex q = std::exp(-e * step);
      const Complex term = c * power * q / (1.0 - q);
      acc.add(term);
      const double tm = std::abs(term);
      if (m >= 2 && tm <= 1e-18 * std::abs(acc.value()))
        ++small;
      else
        small = 0;
      if (small >= 2 || (tm == 0.0 && m > 4 && std::abs(c) == 0.0 && std::abs(c_prev) == 0.0)) break;
      const Complex c_next = (2.0 * y * c - 2.0 * c_prev) / static_cast<double>(m + 1);
      c_prev = c;
      c = c_next;
      power *= t0;
    }
    return std::exp(shift_ - nu_ * log_t0) * acc.value();
  }

  Complex nu_, z_;
  bool scaled_;
  double w0_ = 0.0;
  Path path_;
  Complex shift_{};
};

inline HermiteResult integral_impl(Complex nu, Complex z, const QuadratureSpec& spec,
                                   bool scaled, bool allow_bend = true) {
  if (!(nu.real() < 0.0))
    throw DomainError("hermite_integral: integral representation requires Re nu < 0");
  HermiteResult straight = IntegralRepEvaluator(nu, z, scaled).run(spec);
  if (!straight.degraded || !allow_bend) return straight;
  try {
    HermiteResult bent = IntegralRepEvaluator(nu, z, scaled, true).run(spec);
    if (bent.err_estimate < straight.err_estimate) return bent;
  } catch (const ConvergenceError&) {
  }
  return straight;
}

inline HermiteResult lift_impl(Complex nu, Complex z, const QuadratureSpec& spec, bool scaled) {
  if (nu.real() < 0.0) throw DomainError("hermite: RecurrenceLift requires Re nu >= 0");
  const int k = static_cast<int>(std::ceil(nu.real())) + 1;
  const Complex mu0 = nu - static_cast<double>(k);
  HermiteResult lower = integral_impl(mu0 - 1.0, z, spec, scaled, false);
  HermiteResult upper = integral_impl(mu0, z, spec, scaled, false);
  Complex prev = lower.value, cur = upper.value;
  double growth = 1.0;
  for (int j = 0; j < k; ++j) {
    const Complex mu = mu0 + static_cast<double>(j);
    const Complex a = 2.0 * z * cur, b = 2.0 * mu * prev;
    const Complex next = a - b;
    const double mag = std::abs(next);
    growth *= mag > 0.0 ? (std::abs(a) + std::abs(b)) / mag : std::numeric_limits<double>::infinity();
    prev = cur;
    cur = next;
  }
  HermiteResult out;
  out.value = cur;
  out.method = HermiteMethod::RecurrenceLift;
  out.nodes = lower.nodes + upper.nodes;
  out.cancellation = std::max(lower.cancellation, upper.cancellation) * growth;
  out.err_estimate =
      std::max(std::max(lower.err_estimate, upper.err_estimate) * growth, out.cancellation * kEps);
  out.degraded = out.err_estimate > spec.tol;
  return out;
}

inline HermiteResult dispatch(Complex nu, Complex z, HermiteMethod method, double tol,
                              const HermiteOptions& opt, bool scaled);

// H_nu(z) = 2^nu Gamma(nu+1)/sqrt(pi) [e^{i pi nu/2} S(iz) + e^{-i pi nu/2} S(-iz)]
// with S = e^{-w^2} H_{-nu-1}(w) the scaled values at w = +-iz, since
// e^{z^2} H_mu(+-iz) = S(+-iz).
inline HermiteResult reflection_impl(Complex nu, Complex z, double tol, const HermiteOptions& opt,
                                     bool scaled) {
  const Complex mu = -nu - 1.0;
  HermiteOptions inner = opt;
  inner.fallbacks = false;
  const HermiteResult plus = dispatch(mu, kI * z, HermiteMethod::Auto, tol, inner, true);
  const HermiteResult minus = dispatch(mu, -kI * z, HermiteMethod::Auto, tol, inner, true);
  Complex log_c = nu * kLn2 - 0.5 * kLnPi + complex_log_gamma(nu + 1.0);
  if (scaled) log_c -= z * z;
  const Complex half_turn = kI * kPi * nu / 2.0;
  const Complex a = std::exp(log_c + half_turn) * plus.value;
  const Complex b = std::exp(log_c - half_turn) * minus.value;
  HermiteResult out;
  out.value = a + b;
  out.method = HermiteMethod::Reflection;
  out.nodes = plus.nodes + minus.nodes;
  const double mag = std::abs(out.value);
  const double spread = mag > 0.0 ? (std::abs(a) + std::abs(b)) / mag
                                  : std::numeric_limits<double>::infinity();
  out.cancellation = spread * std::max(plus.cancellation, minus.cancellation);
  out.err_estimate = (mag > 0.0 ? (std::abs(a) * plus.err_estimate + std::abs(b) * minus.err_estimate) / mag
                                : std::numeric_limits<double>::infinity()) +
                     spread * (1e-13 + std::abs(z * z) * kEps);
  out.degraded = out.err_estimate > tol;
  return out;
}

inline HermiteResult dispatch(Complex nu, Complex z, HermiteMethod method, double tol,
                              const HermiteOptions& opt, bool scaled) {
  if (!(tol > 0.0)) throw DomainError("hermite: tol must be positive");
  QuadratureSpec spec = opt.integral;
  spec.tol = tol;
  switch (method) {
    case HermiteMethod::Series: return series_impl(nu, z, tol, opt.series_max_terms, scaled);
    case HermiteMethod::IntegralRep: return integral_impl(nu, z, spec, scaled);
    case HermiteMethod::RecurrenceLift: return lift_impl(nu, z, spec, scaled);
    case HermiteMethod::Reflection:
      if (is_nonnegative_integer(-nu - 1.0))
        throw PoleError(static_cast<long>(std::lround(nu.real() + 1.0)));
      return reflection_impl(nu, z, tol, opt, scaled);
    case HermiteMethod::Auto: break;
  }
  if (is_nonnegative_integer(nu)) return series_impl(nu, z, tol, opt.series_max_terms, scaled);
  if (std::abs(z) <= opt.z_switch) {
    HermiteResult s = series_impl(nu, z, tol, opt.series_max_terms, scaled);
    if (s.cancellation <= opt.cancellation_limit) return s;
  }
  HermiteResult best = nu.real() < 0.0 ? integral_impl(nu, z, spec, scaled, false)
                                       : lift_impl(nu, z, spec, scaled);
  if (!best.degraded || !opt.fallbacks) return best;
  auto consider = [&](auto&& attempt) {
    try {
      HermiteResult r = attempt();
      // An estimate near 1 carries no information for ranking.
      if (r.err_estimate < best.err_estimate && r.err_estimate < 0.1) best = r;
    } catch (const ConvergenceError&) {
    }
  };
  if (!is_nonnegative_integer(-nu - 1.0))
    consider([&] { return reflection_impl(nu, z, tol, opt, scaled); });
  if (best.degraded && nu.real() < 0.0)
    consider([&] { return IntegralRepEvaluator(nu, z, scaled, true).run(spec); });
  return best;
}

}  // namespace detail

/// Power series for H_nu(z), summed in double-double; truncated after 30
/// consecutive terms below min(tol, 1e-24) * (largest partial sum). Throws
/// ConvergenceError past max_terms.
inline HermiteResult hermite_series(Complex nu, Complex z, double tol = 1e-12,
                                    int max_terms = 2000) {
  return detail::series_impl(nu, z, tol, max_terms, false);
}

/// Integral representation, Re nu < 0. Throws DomainError otherwise.
inline HermiteResult hermite_integral(Complex nu, Complex z,
                                      const QuadratureSpec& spec = HermiteOptions{}.integral) {
  return detail::integral_impl(nu, z, spec, false);
}

/// H_nu(z) by the requested method. Auto: the series for |z| <= z_switch unless
/// its cancellation ratio exceeds the limit, otherwise IntegralRep for
/// Re nu < 0 and RecurrenceLift for Re nu >= 0; a degraded result from those is
/// retried through the reflection formula and a bent integration path, keeping
/// the smallest error estimate. Nonnegative integer orders
/// always take the (terminating) series.
inline HermiteResult hermite(Complex nu, Complex z, HermiteMethod method = HermiteMethod::Auto,
                             double tol = 1e-12, const HermiteOptions& opt = {}) {
  return detail::dispatch(nu, z, method, tol, opt, false);
}

/// e^{-z^2} H_nu(z), same dispatch as hermite().
inline HermiteResult hermite_scaled(Complex nu, Complex z,
                                    HermiteMethod method = HermiteMethod::Auto, double tol = 1e-12,
                                    const HermiteOptions& opt = {}) {
  return detail::dispatch(nu, z, method, tol, opt, true);
}

/// Relative residual of
///   H_nu(z) = 2^nu Gamma(nu+1)/sqrt(pi) e^{z^2}
///             [e^{i pi nu/2} H_{-nu-1}(iz) + e^{-i pi nu/2} H_{-nu-1}(-iz)].
/// Throws PoleError for negative integer nu.
inline double hermite_reflection_residual(Complex nu, Complex z, double tol = 1e-13,
                                          const HermiteOptions& opt = {}) {
  const Complex g = complex_gamma(nu + 1.0);
  const Complex lhs = hermite(nu, z, HermiteMethod::Auto, tol, opt).value;
  const Complex mu = -nu - 1.0;
  const Complex plus = hermite(mu, kI * z, HermiteMethod::Auto, tol, opt).value;
  const Complex minus = hermite(mu, -kI * z, HermiteMethod::Auto, tol, opt).value;
  const Complex half_turn = kI * kPi * nu / 2.0;
  const Complex rhs = std::exp(nu * kLn2 + z * z - 0.5 * kLnPi) * g *
                      (std::exp(half_turn) * plus + std::exp(-half_turn) * minus);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

namespace detail {

// U(a, z) = mantissa * exp(exponent); exponent = z^2 / 4.
struct SplitValue {
  HermiteResult mantissa;
  Complex exponent;
};

inline SplitValue parabolic_u_split(Complex a, Complex z, double tol, const HermiteOptions& opt) {
  const Complex nu = -a - 0.5;
  // D_nu(z) = 2^{-nu/2} e^{-z^2/4} H_nu(z/sqrt 2) = 2^{-nu/2} e^{z^2/4} [e^{-y^2} H_nu(y)].
  HermiteResult h = hermite_scaled(nu, z / kSqrt2, HermiteMethod::Auto, tol, opt);
  h.value *= std::exp(-nu * (kLn2 / 2.0));
  return {h, z * z / 4.0};
}

}  // namespace detail

/// Parabolic cylinder function U(a, z) = D_{-a-1/2}(z).
inline HermiteResult parabolic_u(Complex a, Complex z, double tol = 1e-12,
                                 const HermiteOptions& opt = {}) {
  detail::SplitValue s = detail::parabolic_u_split(a, z, tol, opt);
  HermiteResult out = s.mantissa;
  out.value *= std::exp(s.exponent);
  return out;
}

/// |w'' - (z^2/4 + a) w| / max|w| for w = U(a, .), with w'' from central
/// differences of step h around z.
inline double parabolic_u_ode_residual(Complex a, Complex z, double h = 1e-3, double tol = 1e-13,
                                       const HermiteOptions& opt = {}) {
  const Complex wm = parabolic_u(a, z - h, tol, opt).value;
  const Complex w0 = parabolic_u(a, z, tol, opt).value;
  const Complex wp = parabolic_u(a, z + h, tol, opt).value;
  const Complex second = (wp - 2.0 * w0 + wm) / (h * h);
  const double scale = std::max({std::abs(wm), std::abs(w0), std::abs(wp), 1e-300});
  return std::abs(second - (z * z / 4.0 + a) * w0) / scale;
}

}  // namespace auxr
