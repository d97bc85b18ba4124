#pragma once

// Classical sanity anchor, separate from the R(s) representations:
//   zeta(s) = R(s) + chi(s) conj(R(1 - conj s)),
//   chi(s)  = pi^{s - 1/2} Gamma((1 - s)/2) / Gamma(s/2).
// This identity is not part of the auxiliary-function construction itself; it
// is kept here only as an external cross-check and is reached from the CLI
// through its own `zeta` subcommand.

#include <cmath>

#include "auxr/auxiliary.hpp"
#include "auxr/gamma.hpp"

namespace auxr {

/// chi(s). Throws PoleError where (1 - s)/2 is a nonpositive integer (s = 1, 3, 5, ...).
inline Complex zeta_chi(Complex s) {
  const Complex g = complex_gamma((1.0 - s) / 2.0);
  return std::exp((s - 0.5) * kLnPi) * g * recip_gamma(s / 2.0);
}

/// zeta(s) through two Definition-contour evaluations of R.
inline EvalResult zeta_via_r(Complex s, const QuadratureSpec& spec) {
  const Complex chi = zeta_chi(s);
  const Complex s_dual = 1.0 - std::conj(s);
  const REvalResult direct = r_definition(s, spec);
  const REvalResult dual = r_definition(s_dual, definition_spec(s_dual, spec.tol));
  EvalResult out;
  const Complex a = direct.value;
  const Complex b = chi * std::conj(dual.value);
  out.value = a + b;
  out.nodes = direct.nodes + dual.nodes;
  const double mag = std::abs(out.value);
  const double abs_err = std::abs(a) * direct.err_estimate + std::abs(b) * dual.err_estimate;
  out.err_estimate = mag > 0.0 ? abs_err / mag : abs_err;
  out.degraded = direct.degraded || dual.degraded;
  return out;
}

inline EvalResult zeta_via_r(Complex s, double tol = 1e-12) {
  return zeta_via_r(s, definition_spec(s, tol));
}

}  // namespace auxr
