#pragma once

#include "raman/types.hpp"

namespace raman {

enum class PhononRegime { Coherent, Chaotic };

/// Initial phonon statistics: a coherent amplitude (taken from the
/// amplitude map) or a chaotic (thermal) state with the given mean
/// occupation and zero mean field.
struct PhononState {
  PhononRegime regime = PhononRegime::Coherent;
  double mean_occupation = 0.0;  // used only in the chaotic regime

  static PhononState coherent() { return {PhononRegime::Coherent, 0.0}; }
  static PhononState chaotic(double n_mean) {
    return {PhononRegime::Chaotic, n_mean};
  }
};

/// Default pump frequency, in units of |g|.  The nonclassicality
/// witnesses depend on the detunings only; absolute frequencies enter
/// through the free-evolution phases of the mean fields.  The default
/// keeps the optical frequencies far above the vibrational one while
/// the phase oscillations stay resolvable at the time steps used here.
inline constexpr double kDefaultPumpFrequency = 100.0;

/// Validated, immutable parameter set for one evaluation.
///
/// All quantities are dimensionless: frequencies and detunings are in
/// units of |g|, time in units of 1/|g|, so g*t below is the rescaled
/// interaction time.
struct RamanConfig {
  Complex g{1.0, 0.0};    // Stokes coupling
  Complex chi{1.0, 0.0};  // anti-Stokes coupling
  double dw1 = 0.0;       // detuning in Stokes generation,  w_S + w_V - w_L
  double dw2 = 0.0;       // detuning in anti-Stokes generation, w_L + w_V - w_A
  PerMode<double> omega{};   // absolute mode frequencies
  double t = 0.0;            // evolution time
  PerMode<Complex> xi0{};    // initial coherent amplitudes
  PhononState phonon{};

  double coupling_scale() const { return std::abs(g); }
  double gt() const { return std::abs(g) * t; }
  double intensity(Mode m) const { return std::norm(at(xi0, m)); }
  Complex amplitude(Mode m) const { return at(xi0, m); }
  double frequency(Mode m) const { return at(omega, m); }
  bool chaotic() const { return phonon.regime == PhononRegime::Chaotic; }
  double mean_phonons() const {
    return chaotic() ? phonon.mean_occupation : intensity(Mode::Phonon);
  }
};

/// Builds a validated config.  w_L defaults to kDefaultPumpFrequency;
/// the Stokes and anti-Stokes frequencies are derived so that the two
/// detuning identities hold exactly:
///   w_S = w_L - w_V + dw1,   w_A = w_L + w_V - dw2.
/// In the chaotic regime the phonon amplitude entry is ignored (reset
/// to zero).
///
/// Throws ValidationError for non-finite input, gt < 0, |g| = 0 or a
/// negative mean occupation.
RamanConfig make_config(Complex g, Complex chi, double dw1, double dw2,
                        double omega_v, double gt,
                        const PerMode<Complex>& amplitudes, PhononState phonon,
                        double omega_pump = kDefaultPumpFrequency);

}  // namespace raman
