#pragma once

// Double-double (~32 significant digits) real and complex arithmetic, used
// where a power series cancels by more digits than a double carries.

#include <cmath>
#include <complex>

namespace auxr::dd {

struct Real {
  double hi = 0.0;
  double lo = 0.0;

  constexpr Real() = default;
  constexpr Real(double x) : hi(x), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr Real(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace detail {

inline Real quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Real two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Real two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline Real operator+(Real a, Real b) {
  Real s = detail::two_sum(a.hi, b.hi);
  Real t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline Real operator-(Real a) { return {-a.hi, -a.lo}; }
inline Real operator-(Real a, Real b) { return a + (-b); }

inline Real operator*(Real a, Real b) {
  Real p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline Real operator*(Real a, double b) {
  Real p = detail::two_prod(a.hi, b);
  p.lo += a.lo * b;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline Real operator/(Real a, Real b) {
  const double q1 = a.hi / b.hi;
  Real r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  Real q = detail::quick_two_sum(q1, q2);
  return q + Real(q3);
}

struct Complex {
  Real re;
  Real im;

  constexpr Complex() = default;
  constexpr Complex(Real r, Real i = Real()) : re(r), im(i) {}  // NOLINT
  Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  double abs() const { return std::abs(to_complex()); }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, double b) { return {a.re * b, a.im * b}; }
inline Complex operator/(const Complex& a, const Complex& b) {
  const Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline Complex operator/(const Complex& a, double b) { return {a.re / Real(b), a.im / Real(b)}; }

/// Principal square root: one Newton step from the double result.
inline Complex sqrt(const Complex& w) {
  const Complex s0(std::sqrt(w.to_complex()));
  return (s0 + w / s0) * 0.5;
}

/// exp for |w| well below 1 (Taylor series to double-double precision).
inline Complex exp_small(const Complex& w) {
  Complex sum(Real(1.0));
  Complex term(Real(1.0));
  for (int k = 1; k < 40; ++k) {
    term = term * w / static_cast<double>(k);
    sum = sum + term;
    if (term.abs() < 1e-34 * sum.abs()) break;
  }
  return sum;
}

}  // namespace auxr::dd
