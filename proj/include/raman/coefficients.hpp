#pragma once

#include "raman/config.hpp"

namespace raman {

/// Coefficients of the second-order finite-time solution of the mode
/// operators, evaluated at one time point.  f* belong to the pump,
/// g* to the Stokes, h* to the phonon and l* to the anti-Stokes mode.
///
/// Structural identities, exact by construction:
///   f5 = f6,  f7 = -f8,  g5 = -g6,  h5 = -h6,  h7 = -h8,  l5 = l6,
/// and |f1| = |g1| = |h1| = |l1| = 1 (free-evolution phases).
struct CoeffSet {
  Complex f1, f2, f3, f4, f5, f6, f7, f8;
  Complex g1, g2, g3, g4, g5, g6;
  Complex h1, h2, h3, h4, h5, h6, h7, h8;
  Complex l1, l2, l3, l4, l5, l6;
};

/// Dimensionless threshold on |x*t| below which a denominator
/// combination x in {dw1, dw2, dw1-dw2, dw1+dw2} is treated as
/// singular and the corresponding expression is evaluated through its
/// analytic limit instead of direct division.
inline constexpr double kLimitSwitch = 1e-6;

/// Evaluates all 28 coefficients.  Finite for every input, including
/// the degenerate detuning lines dw1 = 0, dw2 = 0, dw1 = +-dw2 and
/// their intersections: each singular combination is computed from a
/// series/divided-difference form accurate to ~1e-15 relative.
CoeffSet eval_coeffs(const RamanConfig& cfg);

/// Literal transliteration of the closed forms with direct division.
/// Intended for cross-checking eval_coeffs away from the singular
/// lines; throws ValidationError if any of |dw1*t|, |dw2*t|,
/// |(dw1-dw2)*t|, |(dw1+dw2)*t| is below kLimitSwitch.
CoeffSet eval_coeffs_raw(const RamanConfig& cfg);

namespace detail {

// Entire functions underlying all coefficient expressions.
//   ee1(z) = (e^z - 1)/z        ee2(z) = (e^z - 1 - z)/z^2
//   div_diff(z, w) = (ee1(z+w) - ee1(z))/w
Complex ee1(Complex z);
Complex ee2(Complex z);
Complex ee1_derivative(Complex z, int order);  // order in [1,4]
Complex div_diff(Complex z, Complex w);

// (e^{ixt} - 1)/x, (e^{ixt} - 1 - ixt)/x^2 and the divided difference
// [(e^{i(q+r)t}-1)/(q+r) - (e^{iqt}-1)/q] / r, all as entire functions
// of the real frequency arguments.
Complex phi1(double x, double t);
Complex psi(double x, double t);
Complex phi11(double q, double r, double t);

// phi11(q, r) - phi11(r, q) with the exact (q - r) prefactor factored
// out; stable arbitrarily close to the locked lines q = +-r.
Complex phi11_antisym(double q, double r, double t);

}  // namespace detail

}  // namespace raman
