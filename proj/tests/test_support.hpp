#pragma once

#include <random>

#include "raman/charfun.hpp"

namespace raman::test {

inline double rel_diff(double a, double b, double floor = 1e-12) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

inline double rel_diff(const Complex& a, const Complex& b,
                       double floor = 1e-12) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

struct RandomOptions {
  double gt_min = 1e-4;
  double gt_max = 0.1;
  double chi_mod_min = 0.25;
  double chi_mod_max = 2.0;
  double det_max = 25.0;
  double il_max = 10.0;
  double is_max = 9.0;
  double iv_max = 0.25;
  double ia_max = 1.0;
  double n_mean_max = 2.0;
  bool chaotic = false;
  bool random_phases = true;
  double special_detuning_fraction = 0.2;  // exact 0 / locked lines
};

inline RamanConfig random_config(std::mt19937_64& rng,
                                 const RandomOptions& o = {}) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto phase = [&]() { return o.random_phases ? 2.0 * M_PI * u(rng) : 0.0; };

  const Complex g = std::polar(1.0, phase());
  const Complex chi =
      std::polar(o.chi_mod_min + (o.chi_mod_max - o.chi_mod_min) * u(rng),
                 phase());
  const double gt =
      o.gt_min > 0.0
          ? std::exp(std::log(o.gt_min) +
                     (std::log(o.gt_max) - std::log(o.gt_min)) * u(rng))
          : o.gt_max * u(rng);

  double dw1 = o.det_max * (2.0 * u(rng) - 1.0);
  double dw2 = o.det_max * (2.0 * u(rng) - 1.0);
  const double pick = u(rng);
  if (pick < o.special_detuning_fraction) {
    const double which = u(rng);
    if (which < 0.25) dw1 = 0.0;
    else if (which < 0.5) dw2 = 0.0;
    else if (which < 0.75) dw2 = dw1;
    else dw2 = -dw1;
  }

  PerMode<Complex> xi{};
  at(xi, Mode::Pump) = std::polar(std::sqrt(o.il_max * u(rng)), phase());
  at(xi, Mode::Stokes) = std::polar(std::sqrt(o.is_max * u(rng)), phase());
  at(xi, Mode::Phonon) = std::polar(std::sqrt(o.iv_max * u(rng)), phase());
  at(xi, Mode::AntiStokes) = std::polar(std::sqrt(o.ia_max * u(rng)), phase());

  const PhononState ph = o.chaotic
                             ? PhononState::chaotic(o.n_mean_max * u(rng))
                             : PhononState::coherent();
  const double omega_v = 0.5 + 1.5 * u(rng);
  return make_config(g, chi, dw1, dw2, omega_v, gt, xi, ph);
}

/// Zero-phase amplitudes from intensities.
inline PerMode<Complex> amps(double il, double is, double iv, double ia) {
  return {Complex{std::sqrt(il), 0.0}, Complex{std::sqrt(is), 0.0},
          Complex{std::sqrt(iv), 0.0}, Complex{std::sqrt(ia), 0.0}};
}

}  // namespace raman::test
