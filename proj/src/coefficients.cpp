#include "raman/coefficients.hpp"

namespace raman {
namespace detail {

namespace {
constexpr double kSeriesRadius = 0.5;
const Complex kI{0.0, 1.0};
}  // namespace

Complex ee1(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    // sum z^k/(k+1)!, k >= 0
    Complex term{1.0, 0.0};
    Complex sum{1.0, 0.0};
    for (int k = 1; k <= 20; ++k) {
      term *= z / static_cast<double>(k + 1);
      sum += term;
      if (std::abs(term) < 1e-20) break;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

Complex ee2(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    // sum z^k/(k+2)!, k >= 0
    Complex term{0.5, 0.0};
    Complex sum{0.5, 0.0};
    for (int k = 1; k <= 20; ++k) {
      term *= z / static_cast<double>(k + 2);
      sum += term;
      if (std::abs(term) < 1e-20) break;
    }
    return sum;
  }
  return (std::exp(z) - 1.0 - z) / (z * z);
}

Complex ee1_derivative(Complex z, int order) {
  if (std::abs(z) <= kSeriesRadius) {
    // m-th derivative of sum z^j/(j+1)!:  sum ((k+m)!/k!) z^k/(k+m+1)!
    // The k = 0 term is m!/(m+1)! = 1/(m+1).
    const int m = order;
    Complex term{1.0 / static_cast<double>(m + 1), 0.0};
    Complex sum = term;
    for (int k = 1; k <= 22; ++k) {
      // ratio of consecutive series terms: z*(k+m)/(k*(k+m+1))
      term *= z * (static_cast<double>(k + m) /
                   (static_cast<double>(k) * static_cast<double>(k + m + 1)));
      sum += term;
      if (std::abs(term) < 1e-20) break;
    }
    return sum;
  }
  // z*S^(m) = e^z - m*S^(m-1)
  const Complex ez = std::exp(z);
  Complex s = ee1(z);
  for (int m = 1; m <= order; ++m)
    s = (ez - static_cast<double>(m) * s) / z;
  return s;
}

Complex div_diff(Complex z, Complex w) {
  // The Taylor branch engages well above the mandated 1e-6 product so
  // that the direct difference never loses more than ~4 digits to
  // cancellation; the 4-term expansion is accurate to ~1e-18 there.
  if (std::abs(w) < 1e-4) {
    return ee1_derivative(z, 1) + w * (ee1_derivative(z, 2) / 2.0 +
           w * (ee1_derivative(z, 3) / 6.0 + w * ee1_derivative(z, 4) / 24.0));
  }
  return (ee1(z + w) - ee1(z)) / w;
}

Complex phi1(double x, double t) { return kI * t * ee1(kI * x * t); }

Complex psi(double x, double t) { return -t * t * ee2(kI * x * t); }

Complex phi11(double q, double r, double t) {
  return -t * t * div_diff(kI * q * t, kI * r * t);
}

namespace {

// First divided difference (phi1(a) - phi1(b))/(a - b) on real nodes.
Complex phi1_dd1(double a, double b, double t) {
  return -t * t * div_diff(kI * b * t, kI * (a - b) * t);
}

}  // namespace

Complex phi11_antisym(double q, double r, double t) {
  // phi11(q, r) - phi11(r, q) written as (q - r) * phi1[q+r, q, r]:
  // the vanishing prefactor on the locked detuning lines is factored
  // out exactly, the remaining second divided difference is smooth.
  const double s = q + r;
  Complex dd2;
  if (std::max(std::abs(q), std::abs(r)) * t <= 1e-4) {
    // all three nodes are small: complete-homogeneous-polynomial
    // series, phi1[s,q,r] = sum_m phi1^(m)(0)/m! h_{m-2}(s, q, r)
    const double e1 = s + q + r;
    const double e2 = s * q + s * r + q * r;
    const double e3 = s * q * r;
    const double h1 = e1;
    const double h2 = e1 * e1 - e2;
    const double h3 = e1 * e1 * e1 - 2.0 * e1 * e2 + e3;
    const double h4 =
        e1 * e1 * e1 * e1 - 3.0 * e1 * e1 * e2 + e2 * e2 + 2.0 * e1 * e3;
    const double t3 = t * t * t;
    // phi1^(m)(0)/m! = i t (i t)^m / ((m+1) m!), m = 2..6
    dd2 = Complex{0.0, -t3 / 6.0} + (t3 * t / 24.0) * h1 +
          Complex{0.0, t3 * t * t / 120.0} * h2 - (t3 * t3 / 720.0) * h3 +
          Complex{0.0, -t3 * t3 * t / 5040.0} * h4;
  } else if (std::abs(q) >= std::abs(r)) {
    dd2 = (phi1_dd1(s, q, t) - phi1_dd1(q, r, t)) / q;
  } else {
    dd2 = (phi1_dd1(s, r, t) - phi1_dd1(r, q, t)) / r;
  }
  return (q - r) * dd2;
}

}  // namespace detail

CoeffSet eval_coeffs(const RamanConfig& cfg) {
  using detail::phi1;
  using detail::phi11;
  using detail::psi;

  const double t = cfg.t;
  const double d1 = cfg.dw1;
  const double d2 = cfg.dw2;
  const Complex g = cfg.g;
  const Complex x = cfg.chi;
  const double g2abs = std::norm(g);
  const double x2abs = std::norm(x);
  const Complex mi{0.0, -1.0};

  CoeffSet c;
  c.f1 = std::exp(mi * cfg.frequency(Mode::Pump) * t);
  c.g1 = std::exp(mi * cfg.frequency(Mode::Stokes) * t);
  c.h1 = std::exp(mi * cfg.frequency(Mode::Phonon) * t);
  c.l1 = std::exp(mi * cfg.frequency(Mode::AntiStokes) * t);

  c.f2 = std::conj(g) * c.f1 * phi1(-d1, t);
  c.f3 = x * c.f1 * phi1(d2, t);
  c.f4 = x * std::conj(g) * c.f1 * detail::phi11_antisym(-d1, d2, t);
  c.f5 = g2abs * c.f1 * psi(-d1, t);
  c.f6 = c.f5;
  c.f7 = x2abs * c.f1 * psi(d2, t);
  c.f8 = -c.f7;

  c.g2 = g * c.g1 * phi1(d1, t);
  c.g3 = -std::conj(x) * g * c.g1 * phi11(d1, -d2, t);
  c.g4 = x * g * c.g1 * phi11(d1, d2, t);
  c.g5 = g2abs * c.g1 * psi(d1, t);
  c.g6 = -c.g5;

  c.h2 = g * c.h1 * phi1(d1, t);
  c.h3 = x * c.h1 * phi1(d2, t);
  c.h4 = x * g * c.h1 * detail::phi11_antisym(d1, d2, t);
  c.h5 = -g2abs * c.h1 * psi(d1, t);
  c.h6 = -c.h5;
  c.h7 = -x2abs * c.h1 * psi(d2, t);
  c.h8 = -c.h7;

  c.l2 = std::conj(x) * c.l1 * phi1(-d2, t);
  c.l3 = std::conj(x) * g * c.l1 * phi11(-d2, d1, t);
  c.l4 = std::conj(x) * std::conj(g) * c.l1 * phi11(-d2, -d1, t);
  c.l5 = x2abs * c.l1 * psi(-d2, t);
  c.l6 = c.l5;
  return c;
}

CoeffSet eval_coeffs_raw(const RamanConfig& cfg) {
  const double t = cfg.t;
  const double d1 = cfg.dw1;
  const double d2 = cfg.dw2;
  for (double comb : {d1, d2, d1 - d2, d1 + d2}) {
    if (std::abs(comb * t) < kLimitSwitch)
      throw ValidationError(
          "eval_coeffs_raw: |x*t| below the limit-switch threshold for a "
          "singular denominator combination; use eval_coeffs");
  }

  const Complex g = cfg.g;
  const Complex x = cfg.chi;
  const double g2abs = std::norm(g);
  const double x2abs = std::norm(x);
  const Complex i{0.0, 1.0};
  const Complex mi{0.0, -1.0};
  const auto E = [&](double w) { return std::exp(i * w * t) - 1.0; };

  CoeffSet c;
  c.f1 = std::exp(mi * cfg.frequency(Mode::Pump) * t);
  c.g1 = std::exp(mi * cfg.frequency(Mode::Stokes) * t);
  c.h1 = std::exp(mi * cfg.frequency(Mode::Phonon) * t);
  c.l1 = std::exp(mi * cfg.frequency(Mode::AntiStokes) * t);

  const double dm = d1 - d2;
  const double dp = d1 + d2;

  c.f2 = -std::conj(g) * c.f1 / d1 * E(-d1);
  c.f3 = x * c.f1 / d2 * E(d2);
  c.f4 = -x * std::conj(g) * c.f1 / d2 *
             (E(-dm) / dm - std::exp(mi * d1 * t) / d1) -
         x * std::conj(g) * c.f1 / d1 *
             (E(-dm) / dm + std::exp(i * d2 * t) / d2);
  c.f5 = g2abs * c.f1 / (d1 * d1) * E(-d1) + i * g2abs * t * c.f1 / d1;
  c.f6 = c.f5;
  c.f7 = x2abs * c.f1 / (d2 * d2) * E(d2) - i * x2abs * t * c.f1 / d2;
  c.f8 = -c.f7;

  c.g2 = g * c.g1 / d1 * E(d1);
  c.g3 = std::conj(x) * g * c.g1 / d2 * (E(dm) / dm - E(d1) / d1);
  c.g4 = x * g * c.g1 / d2 * (E(dp) / dp - E(d1) / d1);
  c.g5 = g2abs * c.g1 / (d1 * d1) * E(d1) - i * g2abs * t * c.g1 / d1;
  c.g6 = -c.g5;

  c.h2 = g * c.h1 / d1 * E(d1);
  c.h3 = x * c.h1 / d2 * E(d2);
  c.h4 = x * g * c.h1 / d2 * (E(dp) / dp - std::exp(i * d1 * t) / d1) -
         x * g * c.h1 / d1 * (E(dp) / dp - std::exp(i * d2 * t) / d2);
  c.h5 = -g2abs * c.h1 / (d1 * d1) * E(d1) + i * g2abs * t * c.h1 / d1;
  c.h6 = -c.h5;
  c.h7 = -x2abs * c.h1 / (d2 * d2) * E(d2) + i * x2abs * t * c.h1 / d2;
  c.h8 = -c.h7;

  c.l2 = -std::conj(x) * c.l1 / d2 * E(-d2);
  c.l3 = std::conj(x) * g * c.l1 / d1 * (E(dm) / dm + E(-d2) / d2);
  c.l4 = std::conj(x) * std::conj(g) * c.l1 / d1 * (E(-dp) / dp - E(-d2) / d2);
  c.l5 = x2abs * c.l1 / (d2 * d2) * E(-d2) + i * x2abs * t * c.l1 / d2;
  c.l6 = c.l5;
  return c;
}

}  // namespace raman
