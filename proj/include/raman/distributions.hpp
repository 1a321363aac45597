#pragma once

#include <vector>

#include "raman/charfun.hpp"

namespace raman {

/// Joint photon/phonon number probabilities on a rectangular cutoff.
/// tail_bound is an analytic upper bound on the probability mass
/// outside the stored window, so total_mass() lies in
/// [1 - tail_bound, 1].
struct JointNumberDist {
  std::vector<double> probs;  // (rows+1) x (cols+1), row-major
  int rows = 0, cols = 0;     // inclusive cutoffs
  Mode row_mode = Mode::Stokes, col_mode = Mode::Phonon;
  double tail_bound = 0.0;

  double at(int i, int j) const {
    return probs[static_cast<std::size_t>(i) * (cols + 1) + j];
  }
  double total_mass() const;
};

/// Rectangular evaluation grid for integrated-intensity
/// quasidistributions (row = first intensity argument).
struct GridSpec {
  double row_max = 2.0;
  double col_max = 2.0;
  int rows = 100;  // number of intervals; rows+1 samples include 0 and max
  int cols = 100;
};

struct QuasiDistGrid {
  std::vector<double> values;  // (rows+1) x (cols+1), row-major
  GridSpec grid;
  double s = 1.0;

  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * (grid.cols + 1) + j];
  }
  double min_value() const;
};

/// B_S of a phonon-vacuum spontaneous record (Stokes-phonon pair
/// generation); validates the regime and throws RegimeError otherwise.
double stokes_phonon_intensity(const NoiseTerms& nt);

/// (B_L, B_V) of a phonon-vacuum partial-spontaneous record
/// (pump-phonon analysis, seeded anti-Stokes, empty Stokes).
/// Throws RegimeError, with a distinct message for B_V < B_L.
std::pair<double, double> pump_phonon_intensities(const NoiseTerms& nt);

/// Stokes-phonon joint number distribution: a strictly diagonal
/// geometric law, p(n, n) = B_S^n / (1+B_S)^(1+n).
JointNumberDist joint_sv(const NoiseTerms& nt, int cutoff);

/// Pump-phonon joint number distribution,
///   p(n_L, n_V) = C(n_V, n_L) B_L^{n_L} (B_V-B_L)^{n_V-n_L}
///                 / (1+B_V)^{1+n_V}  for n_V >= n_L, else 0.
JointNumberDist joint_lv(const NoiseTerms& nt, int cutoff_l, int cutoff_v);

/// Ordering-parameter thresholds above which the corresponding
/// integrated-intensity quasidistribution develops negative values.
double sth_sv(const NoiseTerms& nt);  // 1 + 2 B_S - 2 sqrt(B_S)
double sth_lv(const NoiseTerms& nt);  // 1 + 2 B_L + B_S - 2 sqrt(B_L)

/// s-ordered Stokes-phonon integrated-intensity quasidistribution on a
/// grid.  Oscillatory (sine) kernel where -K_SVs > 0; the real
/// positive sinh continuation on the classical side; analytic limit on
/// the diagonal.  Requires 0 < s <= 1.
QuasiDistGrid quasi_sv(const NoiseTerms& nt, double s, const GridSpec& grid);

/// Glauber-Sudarshan (s = 1) pump-phonon integrated-intensity
/// quasidistribution.  Requires B_V > B_L > 0 strictly.
QuasiDistGrid quasi_lv(const NoiseTerms& nt, const GridSpec& grid);

/// Single-point evaluations of the two quasidistributions.
double quasi_sv_value(const NoiseTerms& nt, double s, double w_s, double w_v);
double quasi_lv_value(const NoiseTerms& nt, double w_l, double w_v);

/// Conditional Fano factors of the pump-phonon pair:
///   F_L,c = 1 - B_L/B_V (independent of the conditioning count),
///   F_V,c(n_L) from the conditioned phonon distribution.
double conditional_fano_pump(const NoiseTerms& nt);
double conditional_fano_phonon(const NoiseTerms& nt, double n_pump);

/// p_c(n_L; n_V): pump count conditioned on the phonon count, a
/// binomial over n_L in [0, n_phonon].
std::vector<double> conditional_pump_numbers(const NoiseTerms& nt,
                                             int n_phonon);

/// p_c(n_V; n_L): phonon count conditioned on the pump count, for
/// n_V in [0, n_max] (zero below n_pump).
std::vector<double> conditional_phonon_numbers(const NoiseTerms& nt,
                                               int n_pump, int n_max);

/// Difference number distribution p_-(n), n = n_V - n_L, and the
/// Poissonian reference with the same combined mean B_V + B_L.
struct DifferenceDist {
  std::vector<double> p_minus;
  std::vector<double> p_poisson;
};
DifferenceDist difference_dist(const NoiseTerms& nt, int n_max);

// Gamma-continued evaluations at real (fractional) counts, used for
// dataset reproduction; the probabilistic entry points above stay on
// integers.
double joint_sv_density(double b_s, double n);
double joint_lv_density(double b_l, double b_v, double n_l, double n_v);
double conditional_pump_density(double b_l, double b_v, double n_l, double n_v);
double conditional_phonon_density(double b_l, double b_v, double n_l,
                                  double n_v);
double difference_density(double b_l, double b_v, double n);
double poisson_density(double b_l, double b_v, double n);

}  // namespace raman
