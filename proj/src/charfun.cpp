#include "raman/charfun.hpp"

namespace raman {

PerMode<Complex> mean_fields(const RamanConfig& cfg, const CoeffSet& k) {
  const Complex xL = cfg.amplitude(Mode::Pump);
  const Complex xS = cfg.amplitude(Mode::Stokes);
  const Complex xV = cfg.amplitude(Mode::Phonon);
  const Complex xA = cfg.amplitude(Mode::AntiStokes);
  const double IL = cfg.intensity(Mode::Pump);
  const double IS = cfg.intensity(Mode::Stokes);
  const double IV = cfg.intensity(Mode::Phonon);
  const double IA = cfg.intensity(Mode::AntiStokes);

  PerMode<Complex> xi{};
  if (!cfg.chaotic()) {
    at(xi, Mode::Pump) = k.f1 * xL + k.f2 * xS * xV + k.f3 * std::conj(xV) * xA +
                         k.f4 * std::conj(xL) * xS * xA + k.f5 * xL * (IS + 1.0) +
                         (k.f6 + k.f7) * xL * IV + k.f8 * xL * IA;
    at(xi, Mode::Stokes) = k.g1 * xS + k.g2 * xL * std::conj(xV) +
                           k.g3 * xL * xL * std::conj(xA) +
                           k.g4 * std::conj(xV) * std::conj(xV) * xA +
                           k.g5 * xS * (IV + 1.0) + k.g6 * xS * (IL + 1.0);
    at(xi, Mode::Phonon) = k.h1 * xV + k.h2 * xL * std::conj(xS) +
                           k.h3 * std::conj(xL) * xA +
                           k.h4 * std::conj(xS) * std::conj(xV) * xA +
                           k.h5 * xV * (IL + 1.0) + k.h6 * xV * (IS + 1.0) +
                           k.h7 * xV * IA + k.h8 * xV * IL;
    at(xi, Mode::AntiStokes) = k.l1 * xA + k.l2 * xL * xV +
                               k.l3 * xL * xL * std::conj(xS) +
                               k.l4 * xS * xV * xV + k.l5 * IV * xA +
                               k.l6 * xA * (IL + 1.0);
    return xi;
  }

  // Chaotic phonons: monomials with a single phonon operator or an
  // anomalous phonon pair average to zero; a_V^dag a_V -> n,
  // a_V a_V^dag -> n + 1.  The phonon mean field itself is generated
  // by the phonon-free monomials of the evolved phonon operator.
  const double n = cfg.phonon.mean_occupation;
  at(xi, Mode::Pump) = k.f1 * xL + k.f4 * std::conj(xL) * xS * xA +
                       k.f5 * xL * (IS + 1.0) + (k.f6 + k.f7) * xL * n +
                       k.f8 * xL * IA;
  at(xi, Mode::Stokes) = k.g1 * xS + k.g3 * xL * xL * std::conj(xA) +
                         k.g5 * xS * (n + 1.0) + k.g6 * xS * (IL + 1.0);
  at(xi, Mode::Phonon) = k.h2 * xL * std::conj(xS) + k.h3 * std::conj(xL) * xA;
  at(xi, Mode::AntiStokes) = k.l1 * xA + k.l3 * xL * xL * std::conj(xS) +
                             k.l5 * n * xA + k.l6 * xA * (IL + 1.0);
  return xi;
}

NoiseTerms noise_terms_coherent(const RamanConfig& cfg, const CoeffSet& k) {
  if (cfg.chaotic())
    throw RegimeError("noise_terms_coherent: config is in the chaotic regime");

  const Complex xL = cfg.amplitude(Mode::Pump);
  const Complex xS = cfg.amplitude(Mode::Stokes);
  const Complex xV = cfg.amplitude(Mode::Phonon);
  const Complex xA = cfg.amplitude(Mode::AntiStokes);
  const double IL = cfg.intensity(Mode::Pump);
  const double IA = cfg.intensity(Mode::AntiStokes);

  NoiseTerms nt;
  nt.regime = PhononRegime::Coherent;
  at(nt.B, Mode::Pump) = std::norm(k.f3) * IA;
  at(nt.B, Mode::Stokes) = std::norm(k.g2) * IL;
  at(nt.B, Mode::Phonon) = std::norm(k.h2) * IL + std::norm(k.h3) * IA;
  at(nt.C, Mode::Pump) = (k.f2 * k.f3 + k.f1 * k.f4) * xS * xA;
  at(nt.C, Mode::Phonon) = (k.h2 * k.h3 + k.h1 * k.h4) * std::conj(xS) * xA;
  at(nt.D, ModePair::PumpStokes) = (k.f1 * k.g6 + k.f2 * k.g2) * xL * xS;
  at(nt.D, ModePair::PumpPhonon) =
      k.f1 * k.h3 * xA + (k.f1 * k.h5 + k.f1 * k.h8 + k.f2 * k.h2) * xL * xV;
  at(nt.D, ModePair::PumpAntiStokes) = k.f1 * k.l6 * xL * xA;
  at(nt.D, ModePair::StokesPhonon) =
      k.g1 * k.h2 * xL + k.g1 * k.h6 * xS * xV +
      (k.g1 * k.h4 + k.g2 * k.h3) * std::conj(xV) * xA;
  at(nt.D, ModePair::StokesAntiStokes) = k.g1 * k.l3 * xL * xL;
  at(nt.D, ModePair::PhononAntiStokes) = k.h1 * k.l5 * xV * xA;
  at(nt.Dbar, ModePair::PumpStokes) =
      std::conj(k.f3) * k.g2 * xL * std::conj(xA);
  nt.xi_t = mean_fields(cfg, k);
  return nt;
}

NoiseTerms noise_terms_chaotic(const RamanConfig& cfg, const CoeffSet& k) {
  if (!cfg.chaotic())
    throw RegimeError("noise_terms_chaotic: config is in the coherent regime");

  const Complex xL = cfg.amplitude(Mode::Pump);
  const Complex xS = cfg.amplitude(Mode::Stokes);
  const Complex xA = cfg.amplitude(Mode::AntiStokes);
  const double IL = cfg.intensity(Mode::Pump);
  const double IS = cfg.intensity(Mode::Stokes);
  const double IA = cfg.intensity(Mode::AntiStokes);
  const double n = cfg.phonon.mean_occupation;

  NoiseTerms nt;
  nt.regime = PhononRegime::Chaotic;
  at(nt.B, Mode::Pump) = std::norm(k.f2) * IS * n + std::norm(k.f3) * IA * (n + 1.0);
  at(nt.B, Mode::Stokes) = std::norm(k.g2) * IL * (n + 1.0);
  at(nt.B, Mode::Phonon) = n + std::norm(k.h2) * (IL + n * (IL - IS)) +
                           std::norm(k.h3) * (IA + n * (IA - IL));
  at(nt.B, Mode::AntiStokes) = std::norm(k.l2) * IL * n;
  at(nt.C, Mode::Pump) = (k.f2 * k.f3 * (2.0 * n + 1.0) + k.f1 * k.f4) * xS * xA;
  at(nt.C, Mode::Phonon) =
      (k.h2 * k.h3 + k.h1 * k.h4 * (2.0 * n + 1.0)) * std::conj(xS) * xA;
  at(nt.D, ModePair::PumpStokes) =
      (k.f1 * k.g6 + k.f2 * k.g2 * (n + 1.0)) * xL * xS;
  at(nt.D, ModePair::PumpPhonon) = k.f1 * k.h3 * (n + 1.0) * xA;
  at(nt.D, ModePair::PumpAntiStokes) = (k.f1 * k.l6 + k.f3 * k.l2 * n) * xL * xA;
  at(nt.D, ModePair::StokesPhonon) = k.g1 * k.h2 * (n + 1.0) * xL;
  // Stokes-anti-Stokes pair correlation: one Stokes and one
  // anti-Stokes vertex act on the thermal phonons (g2 l2, coupling
  // weight g chi*), matching the exact second-order expectation.
  at(nt.D, ModePair::StokesAntiStokes) =
      (k.g1 * k.l3 + k.g2 * k.l2 * n) * xL * xL;
  at(nt.Dbar, ModePair::PumpStokes) =
      std::conj(k.f3) * k.g2 * (n + 1.0) * xL * std::conj(xA);
  at(nt.Dbar, ModePair::PumpPhonon) = std::conj(k.f2) * k.h1 * n * std::conj(xS);
  at(nt.Dbar, ModePair::PumpAntiStokes) =
      std::conj(k.f2) * k.l2 * n * xL * std::conj(xS);
  // normal cross term of the evolved phonon/anti-Stokes pair; the
  // phonon-side free phase enters conjugated
  at(nt.Dbar, ModePair::PhononAntiStokes) = std::conj(k.h1) * k.l2 * n * xL;
  nt.xi_t = mean_fields(cfg, k);
  return nt;
}

NoiseTerms noise_terms(const RamanConfig& cfg, const CoeffSet& k) {
  return cfg.chaotic() ? noise_terms_chaotic(cfg, k)
                       : noise_terms_coherent(cfg, k);
}

GaussianMoments predicted_moments(const NoiseTerms& nt) {
  GaussianMoments m;
  m.mean = nt.xi_t;
  for (Mode mo : kAllModes) {
    at(m.occupation, mo) = nt.b(mo) + std::norm(nt.xi(mo));
    at(m.anomalous, mo) = nt.c(mo) + nt.xi(mo) * nt.xi(mo);
  }
  for (ModePair p : kAllPairs) {
    const Complex xi_i = nt.xi(first_of(p));
    const Complex xi_j = nt.xi(second_of(p));
    at(m.cross_normal, p) = nt.dbar(p) + std::conj(xi_i) * xi_j;
    at(m.cross_anomalous, p) = nt.d(p) + xi_i * xi_j;
  }
  return m;
}

}  // namespace raman
