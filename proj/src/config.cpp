#include "raman/config.hpp"

namespace raman {

RamanConfig make_config(Complex g, Complex chi, double dw1, double dw2,
                        double omega_v, double gt,
                        const PerMode<Complex>& amplitudes, PhononState phonon,
                        double omega_pump) {
  require_finite(g, "g");
  require_finite(chi, "chi");
  require_finite(dw1, "dw1");
  require_finite(dw2, "dw2");
  require_finite(omega_v, "omega_V");
  require_finite(gt, "gt");
  require_finite(omega_pump, "omega_L");
  for (Mode m : kAllModes) require_finite(at(amplitudes, m), "amplitude");

  if (std::abs(g) == 0.0) throw ValidationError("|g| must be positive");
  if (gt < 0.0) throw ValidationError("gt must be non-negative");
  if (phonon.regime == PhononRegime::Chaotic) {
    require_finite(phonon.mean_occupation, "n_mean");
    if (phonon.mean_occupation < 0.0)
      throw ValidationError("n_mean must be non-negative");
  }

  RamanConfig cfg;
  cfg.g = g;
  cfg.chi = chi;
  cfg.dw1 = dw1;
  cfg.dw2 = dw2;
  at(cfg.omega, Mode::Pump) = omega_pump;
  at(cfg.omega, Mode::Phonon) = omega_v;
  at(cfg.omega, Mode::Stokes) = omega_pump - omega_v + dw1;
  at(cfg.omega, Mode::AntiStokes) = omega_pump + omega_v - dw2;
  cfg.t = gt / std::abs(g);
  cfg.xi0 = amplitudes;
  cfg.phonon = phonon;
  if (cfg.chaotic()) at(cfg.xi0, Mode::Phonon) = Complex{0.0, 0.0};
  return cfg;
}

}  // namespace raman
