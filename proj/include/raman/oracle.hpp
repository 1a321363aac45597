#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raman/charfun.hpp"

namespace raman {

inline constexpr std::size_t kDefaultDimensionCap = 20000;

/// Truncated four-mode Fock basis with per-mode occupation cutoffs
/// (inclusive).  Flat indices run row-major in the order
/// pump, Stokes, phonon, anti-Stokes.
struct FockBasis {
  std::array<int, 4> cutoff{};
  std::array<std::size_t, 4> stride{};
  std::size_t dim = 0;

  explicit FockBasis(std::array<int, 4> cutoffs,
                     std::size_t dimension_cap = kDefaultDimensionCap);

  std::size_t index(const std::array<int, 4>& occ) const {
    std::size_t idx = 0;
    for (int m = 0; m < 4; ++m) idx += stride[m] * static_cast<std::size_t>(occ[m]);
    return idx;
  }
  int occupation(std::size_t idx, Mode m) const {
    const int i = index_of(m);
    return static_cast<int>((idx / stride[i]) % static_cast<std::size_t>(cutoff[i] + 1));
  }
};

/// Hermitian Hamiltonian in CSR form.
struct SparseHamiltonian {
  std::size_t dim = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col;
  std::vector<Complex> val;

  void apply(const std::vector<Complex>& x, std::vector<Complex>& y) const;
  Complex expectation(const std::vector<Complex>& psi) const;
  double max_abs_row_sum() const;
};

/// Free part sum_j w_j n_j minus the two three-mode interaction terms
/// and their Hermitian conjugates, with exact ladder factors.
/// Throws ValidationError if a cutoff is < 1 or the dimension cap is
/// exceeded.
SparseHamiltonian build_hamiltonian(const RamanConfig& cfg,
                                    const FockBasis& basis);

/// Per-mode initial state: truncated coherent amplitude or Fock state.
struct ModeInitial {
  enum class Kind { Coherent, Fock } kind = Kind::Coherent;
  Complex amplitude{0.0, 0.0};
  int occupation = 0;

  static ModeInitial coherent(Complex xi) {
    return {Kind::Coherent, xi, 0};
  }
  static ModeInitial fock(int n) { return {Kind::Fock, {}, n}; }
};

/// Normalized product state; *leakage receives the squared amplitude
/// discarded by the truncation.
std::vector<Complex> product_state(const FockBasis& basis,
                                   const PerMode<ModeInitial>& init,
                                   double* leakage);

/// psi <- exp(-i H t) psi via Lanczos steps with full
/// reorthogonalization.
void propagate(const SparseHamiltonian& h, std::vector<Complex>& psi, double t);

struct JointCounts {
  std::vector<double> p;  // (rows+1) x (cols+1) row-major
  int rows = 0, cols = 0;
  double at(int i, int j) const { return p[static_cast<std::size_t>(i) * (cols + 1) + j]; }
};

struct OracleResult {
  GaussianMoments moments;
  double norm_error = 0.0;    // | ||psi(t)|| - 1 |
  double energy_drift = 0.0;  // relative <H> drift over the run
  double leakage = 0.0;       // initial truncation leakage
  JointCounts joint_stokes_phonon;
  JointCounts joint_pump_phonon;
};

struct EvolveOptions {
  double leakage_bound = 1e-8;
  double norm_drift_bound = 1e-10;
};

/// Numerically exact evolution of one pure product state.
/// Throws NumericalContractError if the leakage or norm-drift bound is
/// violated.
OracleResult evolve(const RamanConfig& cfg, const FockBasis& basis,
                    const PerMode<ModeInitial>& init,
                    const EvolveOptions& opts = {});

/// Evolution of the configured initial state: coherent product, or a
/// thermal phonon mixture realized as weighted Fock components
/// (weights n^k/(1+n)^{k+1}, truncated once the cumulative weight
/// reaches 1 - mixture_tail and renormalized).
OracleResult evolve_config_state(const RamanConfig& cfg, const FockBasis& basis,
                                 const EvolveOptions& opts = {},
                                 double mixture_tail = 1e-10);

struct CompareOptions {
  std::vector<double> gt_values{0.01, 0.02, 0.04};
  double min_exponent = 2.5;
  double error_floor = 1e-10;  // discrepancies below this are truncation noise
  EvolveOptions evolve{};
};

struct QuantityScaling {
  std::string name;
  std::vector<double> abs_error;  // one per gt value
  double exponent = 0.0;          // log-log slope; +inf if below floor
  bool below_floor = false;
  bool pass = false;
};

struct CompareReport {
  std::vector<double> gt_values;
  std::vector<QuantityScaling> rows;
  double max_norm_error = 0.0;
  double max_energy_drift = 0.0;
  bool pass = false;
};

/// Evolves the exact and perturbative descriptions over a set of
/// rescaled times and fits the power-law scaling of every first and
/// second moment discrepancy.
CompareReport compare(const RamanConfig& cfg, const FockBasis& basis,
                      const CompareOptions& opts = {});

/// Re-runs the moments with every cutoff raised by one and returns the
/// largest relative change.  Values above 1e-6 mean the run is not
/// converged with respect to the truncation.
double cutoff_sensitivity(const RamanConfig& cfg, const FockBasis& basis,
                          const EvolveOptions& opts = {});

}  // namespace raman
