#pragma once

#include "raman/coefficients.hpp"

namespace raman {

/// Data of the Gaussian normal-ordered characteristic function:
/// occupation-like terms B_j, single-mode anomalous terms C_j, the
/// two-mode anomalous (D) and normal (Dbar) cross terms over ordered
/// pairs, and the evolved mean fields xi_j(t).
///
/// Entries that vanish identically in a given regime are exact zeros,
/// never merely small.
struct NoiseTerms {
  PerMode<double> B{};
  PerMode<Complex> C{};
  PerPair<Complex> D{};
  PerPair<Complex> Dbar{};
  PerMode<Complex> xi_t{};
  PhononRegime regime = PhononRegime::Coherent;

  double b(Mode m) const { return at(B, m); }
  Complex c(Mode m) const { return at(C, m); }
  Complex d(ModePair p) const { return at(D, p); }
  Complex dbar(ModePair p) const { return at(Dbar, p); }
  Complex xi(Mode m) const { return at(xi_t, m); }
};

/// Mean fields xi_j(t): the expectation of each evolved mode operator
/// in the initial state, taken term by term over the solution's
/// operator monomials.  Coherent regime: every operator is replaced by
/// its amplitude, with commutator +1 contributions from products such
/// as a a^dag.  Chaotic regime: phonon-operator monomials keep only
/// the diagonal thermal moments (<n_V> for a^dag a, <n_V>+1 for
/// a a^dag, zero otherwise).
PerMode<Complex> mean_fields(const RamanConfig& cfg, const CoeffSet& k);

/// Noise terms with all four modes initially coherent.  Exactly eleven
/// entries are populated: B_L, B_S, B_V, C_L, C_V, D_LS, D_LV, D_LA,
/// D_SV, D_SA, D_VA and Dbar_LS.
/// Throws RegimeError if cfg is chaotic.
NoiseTerms noise_terms_coherent(const RamanConfig& cfg, const CoeffSet& k);

/// Noise terms with a chaotic phonon mode (mean occupation n).
/// Exactly fifteen entries are populated; relative to the coherent
/// case B_A, Dbar_LV, Dbar_LA and Dbar_VA appear while D_VA drops out.
/// Throws RegimeError if cfg is coherent.
NoiseTerms noise_terms_chaotic(const RamanConfig& cfg, const CoeffSet& k);

/// Dispatch on cfg.phonon.regime.
NoiseTerms noise_terms(const RamanConfig& cfg, const CoeffSet& k);

/// First and second moments reconstructed from the Gaussian data:
///   <a_j>           = xi_j(t)
///   <a_j^dag a_j>   = B_j + |xi_j|^2
///   <a_j^2>         = C_j + xi_j^2
///   <a_i^dag a_j>   = Dbar_ij + conj(xi_i) xi_j   (i < j)
///   <a_i a_j>       = D_ij + xi_i xi_j            (i < j)
struct GaussianMoments {
  PerMode<Complex> mean{};
  PerMode<double> occupation{};
  PerMode<Complex> anomalous{};
  PerPair<Complex> cross_normal{};
  PerPair<Complex> cross_anomalous{};
};

GaussianMoments predicted_moments(const NoiseTerms& nt);

}  // namespace raman
