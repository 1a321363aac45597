#pragma once

#include <map>
#include <string>
#include <utility>

#include "raman/charfun.hpp"

namespace raman {

/// Convention for the cross-correlation term of the two-mode squeezing
/// witness: the real part of Dbar (default, the standard two-mode
/// condition) or its modulus.
enum class PairSqueezeTerm { RealPart, Modulus };

/// Entanglement witnesses
///   (K_ij)+- = (B_i +- |C_i|)(B_j +- |C_j|) - (|D_ij| -+ |Dbar_ij|)^2;
/// a negative value of either one certifies intermodal entanglement.
std::pair<double, double> entanglement(const NoiseTerms& nt, ModePair p);

/// Sub-shot-noise parameter
///   C_ij = B_i^2 + B_j^2 + |C_i|^2 + |C_j|^2 - 2|D_ij|^2 - 2|Dbar_ij|^2;
/// negative values certify intensity-difference noise below the
/// coherent-state level.
double sub_shot(const NoiseTerms& nt, ModePair p);

/// Single-mode principal squeezing parameter, lambda_i = 1 + 2(B_i - |C_i|);
/// values below 1 certify squeezing.
double squeezing_single(const NoiseTerms& nt, Mode m);

/// Two-mode squeezing parameter,
///   lambda_ij = 1 + B_i + B_j - 2 Re(Dbar_ij) - |C_i + C_j + 2 D_ij|,
/// with the Dbar term switchable to 2|Dbar_ij|.
double squeezing_pair(const NoiseTerms& nt, ModePair p,
                      PairSqueezeTerm term = PairSqueezeTerm::RealPart);

/// Wave (integrated-intensity) variance
///   <(dW_i)^2> = B_i^2 + |C_i|^2 + 2 B_i |xi_i(t)|^2 + 2 Re[C_i xi_i*(t)^2].
double wave_variance(const NoiseTerms& nt, Mode m);

/// Wave covariance <dW_i dW_j> =
///   |D_ij|^2 - |Dbar_ij|^2 + 2 Re[D_ij xi_i*(t) xi_j*(t)
///                                 - Dbar_ij xi_i(t) xi_j*(t)].
double wave_covariance(const NoiseTerms& nt, ModePair p);

/// Sum and difference variances, <(dW_ij)^2>+- = var_i + var_j +- 2 cov_ij.
std::pair<double, double> sum_diff_variance(const NoiseTerms& nt, ModePair p);

/// Every scalar witness evaluated from one NoiseTerms record.  Small
/// negative values are reported as-is; no clamping.
struct WitnessReport {
  PerPair<double> K_plus{};
  PerPair<double> K_minus{};
  PerPair<double> C_shot{};
  PerMode<double> lambda_single{};
  PerPair<double> lambda_pair{};
  PerMode<double> varW{};
  PerPair<double> covW{};
  PerPair<double> sumvar{};
  PerPair<double> diffvar{};
};

WitnessReport witness_report(const NoiseTerms& nt,
                             PairSqueezeTerm term = PairSqueezeTerm::RealPart);

/// Specialized closed forms for the pump-phonon and Stokes-phonon
/// witnesses, the pump/phonon squeezing parameters and wave variances,
/// and (chaotic regime) the sub-shot parameters, each evaluated
/// directly from the solution coefficients and initial amplitudes
/// without assembling a NoiseTerms record.  Used to cross-validate
/// the generic pipeline: every entry must reproduce the corresponding
/// pipeline value to near machine precision.
///
/// Keys (coherent):  k_lv_plus, k_lv_minus, k_sv_plus, k_sv_minus,
///                   lambda_l, lambda_v, varw_l, varw_v
/// Keys (chaotic):   k_lv_plus, k_lv_minus, k_sv_plus, k_sv_minus,
///                   c_lv, c_sv, c_va, lambda_l, varw_l
std::map<std::string, double> closed_forms(const RamanConfig& cfg,
                                           const CoeffSet& k);

}  // namespace raman
