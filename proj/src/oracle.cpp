#include "raman/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <numeric>

namespace raman {

FockBasis::FockBasis(std::array<int, 4> cutoffs, std::size_t dimension_cap) {
  cutoff = cutoffs;
  std::size_t d = 1;
  for (int m = 3; m >= 0; --m) {
    if (cutoff[m] < 1) throw ValidationError("FockBasis: cutoffs must be >= 1");
    stride[m] = d;
    d *= static_cast<std::size_t>(cutoff[m] + 1);
  }
  if (d > dimension_cap)
    throw ValidationError("FockBasis: dimension " + std::to_string(d) +
                          " exceeds the cap " + std::to_string(dimension_cap));
  dim = d;
}

void SparseHamiltonian::apply(const std::vector<Complex>& x,
                              std::vector<Complex>& y) const {
  y.assign(dim, Complex{0.0, 0.0});
  for (std::size_t r = 0; r < dim; ++r) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
      acc += val[k] * x[col[k]];
    y[r] = acc;
  }
}

Complex SparseHamiltonian::expectation(const std::vector<Complex>& psi) const {
  std::vector<Complex> hpsi;
  apply(psi, hpsi);
  Complex e{0.0, 0.0};
  for (std::size_t i = 0; i < dim; ++i) e += std::conj(psi[i]) * hpsi[i];
  return e;
}

double SparseHamiltonian::max_abs_row_sum() const {
  double best = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    double s = 0.0;
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
      s += std::abs(val[k]);
    best = std::max(best, s);
  }
  return best;
}

namespace {

struct Triplet {
  std::size_t row, col;
  Complex val;
};

SparseHamiltonian from_triplets(std::size_t dim, std::vector<Triplet>& t) {
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseHamiltonian h;
  h.dim = dim;
  h.row_ptr.assign(dim + 1, 0);
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    Complex acc = t[i].val;
    while (j < t.size() && t[j].row == t[i].row && t[j].col == t[i].col) {
      acc += t[j].val;
      ++j;
    }
    if (acc != Complex{0.0, 0.0} || t[i].row == t[i].col) {
      h.col.push_back(t[i].col);
      h.val.push_back(acc);
      ++h.row_ptr[t[i].row + 1];
    }
    i = j;
  }
  for (std::size_t r = 0; r < dim; ++r) h.row_ptr[r + 1] += h.row_ptr[r];
  return h;
}

constexpr int kL = 0, kS = 1, kV = 2, kA = 3;

}  // namespace

SparseHamiltonian build_hamiltonian(const RamanConfig& cfg,
                                    const FockBasis& basis) {
  std::vector<Triplet> trip;
  trip.reserve(basis.dim * 5);

  std::array<int, 4> n{};
  for (std::size_t idx = 0; idx < basis.dim; ++idx) {
    for (Mode m : kAllModes) n[index_of(m)] = basis.occupation(idx, m);

    double diag = 0.0;
    for (Mode m : kAllModes) diag += cfg.frequency(m) * n[index_of(m)];
    trip.push_back({idx, idx, Complex{diag, 0.0}});

    // -g a_L a_S+ a_V+  maps |n> to n_L-1, n_S+1, n_V+1.
    if (n[kL] >= 1 && n[kS] < basis.cutoff[kS] && n[kV] < basis.cutoff[kV]) {
      std::array<int, 4> m = n;
      --m[kL];
      ++m[kS];
      ++m[kV];
      const double amp =
          std::sqrt(static_cast<double>(n[kL]) * (n[kS] + 1) * (n[kV] + 1));
      const std::size_t tgt = basis.index(m);
      trip.push_back({tgt, idx, -cfg.g * amp});
      trip.push_back({idx, tgt, -std::conj(cfg.g) * amp});
    }
    // -chi* a_L a_V a_A+  maps |n> to n_L-1, n_V-1, n_A+1.
    if (n[kL] >= 1 && n[kV] >= 1 && n[kA] < basis.cutoff[kA]) {
      std::array<int, 4> m = n;
      --m[kL];
      --m[kV];
      ++m[kA];
      const double amp =
          std::sqrt(static_cast<double>(n[kL]) * n[kV] * (n[kA] + 1));
      const std::size_t tgt = basis.index(m);
      trip.push_back({tgt, idx, -std::conj(cfg.chi) * amp});
      trip.push_back({idx, tgt, -cfg.chi * amp});
    }
  }
  return from_triplets(basis.dim, trip);
}

std::vector<Complex> product_state(const FockBasis& basis,
                                   const PerMode<ModeInitial>& init,
                                   double* leakage) {
  std::array<std::vector<Complex>, 4> amp;
  double kept = 1.0;
  for (Mode m : kAllModes) {
    const ModeInitial& s = at(init, m);
    const int nmax = basis.cutoff[index_of(m)];
    auto& a = amp[index_of(m)];
    a.assign(static_cast<std::size_t>(nmax) + 1, Complex{0.0, 0.0});
    if (s.kind == ModeInitial::Kind::Fock) {
      if (s.occupation > nmax)
        throw ValidationError("product_state: Fock occupation above cutoff");
      a[static_cast<std::size_t>(s.occupation)] = 1.0;
      continue;
    }
    // c_n = e^{-|xi|^2/2} xi^n / sqrt(n!)
    Complex c = std::exp(-0.5 * std::norm(s.amplitude));
    double mass = 0.0;
    for (int k = 0; k <= nmax; ++k) {
      a[static_cast<std::size_t>(k)] = c;
      mass += std::norm(c);
      c *= s.amplitude / std::sqrt(static_cast<double>(k + 1));
    }
    kept *= mass;
  }
  if (leakage) *leakage = 1.0 - kept;

  std::vector<Complex> psi(basis.dim);
  for (std::size_t idx = 0; idx < basis.dim; ++idx) {
    Complex v{1.0, 0.0};
    for (Mode m : kAllModes)
      v *= amp[index_of(m)][static_cast<std::size_t>(basis.occupation(idx, m))];
    psi[idx] = v;
  }
  const double norm = std::sqrt(kept);
  for (auto& v : psi) v /= norm;
  return psi;
}

namespace {

// Eigen-decomposition of a real symmetric tridiagonal matrix by the
// implicit QL method (d: diagonal, e: subdiagonal, z: eigenvectors,
// initialized to the identity).
void tridiag_eigen(std::vector<double>& d, std::vector<double>& e,
                   std::vector<double>& z, int m) {
  auto zat = [&](int i, int j) -> double& { return z[i * m + j]; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) zat(i, j) = i == j ? 1.0 : 0.0;
  if (m == 1) return;
  std::vector<double> sub(e.begin(), e.end());
  sub.resize(m, 0.0);

  for (int l = 0; l < m; ++l) {
    int iter = 0;
    int mm;
    do {
      for (mm = l; mm < m - 1; ++mm) {
        const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(sub[mm]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (mm != l) {
        if (++iter == 60)
          throw NumericalContractError("tridiagonal eigensolver stalled");
        double g = (d[l + 1] - d[l]) / (2.0 * sub[l]);
        double r = std::hypot(g, 1.0);
        g = d[mm] - d[l] + sub[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = mm - 1; i >= l; --i) {
          double f = s * sub[i];
          const double b = c * sub[i];
          r = std::hypot(f, g);
          sub[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            sub[mm] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < m; ++k) {
            f = zat(k, i + 1);
            zat(k, i + 1) = s * zat(k, i) + c * f;
            zat(k, i) = c * zat(k, i) - s * f;
          }
        }
        if (r == 0.0 && mm - 1 >= l) continue;
        d[l] -= p;
        sub[l] = g;
        sub[mm] = 0.0;
      }
    } while (mm != l);
  }
}

// One Lanczos step: psi <- exp(-i tau H) psi, Krylov dimension <= mmax.
void lanczos_step(const SparseHamiltonian& h, std::vector<Complex>& psi,
                  double tau, int mmax) {
  const std::size_t dim = h.dim;
  const double beta0 = std::sqrt(std::inner_product(
      psi.begin(), psi.end(), psi.begin(), 0.0,
      [](double a, double b) { return a + b; },
      [](const Complex& a, const Complex& b) {
        return (std::conj(a) * b).real();
      }));
  if (beta0 == 0.0) return;

  std::vector<std::vector<Complex>> v;
  v.reserve(static_cast<std::size_t>(mmax));
  v.push_back(psi);
  for (auto& x : v[0]) x /= beta0;

  std::vector<double> alpha, beta;
  std::vector<Complex> w(dim);
  int m = 0;
  for (int j = 0; j < mmax; ++j) {
    h.apply(v[static_cast<std::size_t>(j)], w);
    if (j > 0)
      for (std::size_t i = 0; i < dim; ++i)
        w[i] -= beta[static_cast<std::size_t>(j - 1)] * v[static_cast<std::size_t>(j - 1)][i];
    Complex a{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i)
      a += std::conj(v[static_cast<std::size_t>(j)][i]) * w[i];
    alpha.push_back(a.real());
    for (std::size_t i = 0; i < dim; ++i)
      w[i] -= a * v[static_cast<std::size_t>(j)][i];
    // full reorthogonalization; the Krylov space is small
    for (const auto& q : v) {
      Complex o{0.0, 0.0};
      for (std::size_t i = 0; i < dim; ++i) o += std::conj(q[i]) * w[i];
      for (std::size_t i = 0; i < dim; ++i) w[i] -= o * q[i];
    }
    double b = 0.0;
    for (const auto& x : w) b += std::norm(x);
    b = std::sqrt(b);
    m = j + 1;
    if (b < 1e-14 || j + 1 == mmax) break;
    beta.push_back(b);
    v.push_back(w);
    for (auto& x : v.back()) x /= b;
  }

  // exp(-i tau T) e1 through the tridiagonal eigen-decomposition
  std::vector<double> d(alpha.begin(), alpha.begin() + m);
  std::vector<double> e(beta.begin(),
                        beta.begin() + std::max(0, m - 1));
  std::vector<double> z;
  z.assign(static_cast<std::size_t>(m) * m, 0.0);
  tridiag_eigen(d, e, z, m);

  std::vector<Complex> u(static_cast<std::size_t>(m), Complex{0.0, 0.0});
  for (int k = 0; k < m; ++k) {
    const Complex phase = std::exp(Complex{0.0, -tau * d[static_cast<std::size_t>(k)]});
    const double q0 = z[static_cast<std::size_t>(0) * m + k];
    for (int i = 0; i < m; ++i)
      u[static_cast<std::size_t>(i)] +=
          z[static_cast<std::size_t>(i) * m + k] * phase * q0;
  }

  std::fill(psi.begin(), psi.end(), Complex{0.0, 0.0});
  for (int i = 0; i < m; ++i)
    for (std::size_t kk = 0; kk < dim; ++kk)
      psi[kk] += beta0 * u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)][kk];
}

}  // namespace

void propagate(const SparseHamiltonian& h, std::vector<Complex>& psi,
               double t) {
  if (t == 0.0 || h.dim == 0) return;

  // Shift out the centre of the diagonal; the scalar phase is restored
  // afterwards and the Krylov step count scales with the reduced norm.
  double dmin = 0.0, dmax = 0.0;
  bool first = true;
  for (std::size_t r = 0; r < h.dim; ++r)
    for (std::size_t k = h.row_ptr[r]; k < h.row_ptr[r + 1]; ++k)
      if (h.col[k] == r) {
        const double d = h.val[k].real();
        dmin = first ? d : std::min(dmin, d);
        dmax = first ? d : std::max(dmax, d);
        first = false;
      }
  const double shift = 0.5 * (dmin + dmax);
  SparseHamiltonian hs = h;
  for (std::size_t r = 0; r < hs.dim; ++r)
    for (std::size_t k = hs.row_ptr[r]; k < hs.row_ptr[r + 1]; ++k)
      if (hs.col[k] == r) hs.val[k] -= shift;

  const double hnorm = hs.max_abs_row_sum();
  const int nsteps =
      std::max(1, static_cast<int>(std::ceil(hnorm * std::abs(t) / 4.0)));
  const double tau = t / nsteps;
  for (int s = 0; s < nsteps; ++s) lanczos_step(hs, psi, tau, 40);
  const Complex phase = std::exp(Complex{0.0, -shift * t});
  for (auto& x : psi) x *= phase;
}

namespace {

GaussianMoments measure_moments(const FockBasis& basis,
                                const std::vector<Complex>& psi) {
  GaussianMoments mom;
  std::array<int, 4> n{};
  for (std::size_t idx = 0; idx < basis.dim; ++idx) {
    for (Mode m : kAllModes) n[index_of(m)] = basis.occupation(idx, m);
    const Complex p = psi[idx];
    if (p == Complex{0.0, 0.0}) continue;
    const double w = std::norm(p);

    for (Mode m : kAllModes) {
      const int i = index_of(m);
      at(mom.occupation, m) += n[i] * w;
      // <a_m>: overlap with the state one quantum lower
      if (n[i] >= 1) {
        std::size_t lower = idx - basis.stride[i];
        at(mom.mean, m) +=
            std::conj(psi[lower]) * std::sqrt(static_cast<double>(n[i])) * p;
      }
      if (n[i] >= 2) {
        std::size_t lower2 = idx - 2 * basis.stride[i];
        at(mom.anomalous, m) +=
            std::conj(psi[lower2]) *
            std::sqrt(static_cast<double>(n[i]) * (n[i] - 1)) * p;
      }
    }
    for (ModePair pr : kAllPairs) {
      const int i = index_of(first_of(pr));
      const int j = index_of(second_of(pr));
      // <a_i+ a_j>: raise i, lower j
      if (n[j] >= 1 && n[i] < basis.cutoff[i]) {
        const std::size_t tgt = idx + basis.stride[i] - basis.stride[j];
        at(mom.cross_normal, pr) +=
            std::conj(psi[tgt]) *
            std::sqrt(static_cast<double>(n[i] + 1) * n[j]) * p;
      }
      // <a_i a_j>: lower both
      if (n[i] >= 1 && n[j] >= 1) {
        const std::size_t tgt = idx - basis.stride[i] - basis.stride[j];
        at(mom.cross_anomalous, pr) +=
            std::conj(psi[tgt]) *
            std::sqrt(static_cast<double>(n[i]) * n[j]) * p;
      }
    }
  }
  return mom;
}

JointCounts measure_joint(const FockBasis& basis,
                          const std::vector<Complex>& psi, Mode row,
                          Mode col) {
  JointCounts jc;
  jc.rows = basis.cutoff[index_of(row)];
  jc.cols = basis.cutoff[index_of(col)];
  jc.p.assign(static_cast<std::size_t>(jc.rows + 1) * (jc.cols + 1), 0.0);
  for (std::size_t idx = 0; idx < basis.dim; ++idx) {
    const int i = basis.occupation(idx, row);
    const int j = basis.occupation(idx, col);
    jc.p[static_cast<std::size_t>(i) * (jc.cols + 1) + j] += std::norm(psi[idx]);
  }
  return jc;
}

void accumulate(OracleResult& acc, const OracleResult& r, double w) {
  for (Mode m : kAllModes) {
    at(acc.moments.mean, m) += w * at(r.moments.mean, m);
    at(acc.moments.occupation, m) += w * at(r.moments.occupation, m);
    at(acc.moments.anomalous, m) += w * at(r.moments.anomalous, m);
  }
  for (ModePair p : kAllPairs) {
    at(acc.moments.cross_normal, p) += w * at(r.moments.cross_normal, p);
    at(acc.moments.cross_anomalous, p) += w * at(r.moments.cross_anomalous, p);
  }
  for (std::size_t i = 0; i < acc.joint_stokes_phonon.p.size(); ++i)
    acc.joint_stokes_phonon.p[i] += w * r.joint_stokes_phonon.p[i];
  for (std::size_t i = 0; i < acc.joint_pump_phonon.p.size(); ++i)
    acc.joint_pump_phonon.p[i] += w * r.joint_pump_phonon.p[i];
  acc.norm_error = std::max(acc.norm_error, r.norm_error);
  acc.energy_drift = std::max(acc.energy_drift, r.energy_drift);
  acc.leakage = std::max(acc.leakage, r.leakage);
}

}  // namespace

OracleResult evolve(const RamanConfig& cfg, const FockBasis& basis,
                    const PerMode<ModeInitial>& init,
                    const EvolveOptions& opts) {
  const SparseHamiltonian h = build_hamiltonian(cfg, basis);

  OracleResult res;
  std::vector<Complex> psi = product_state(basis, init, &res.leakage);
  if (res.leakage > opts.leakage_bound) {
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "evolve: truncation leakage %.3g violates the bound %.3g",
                  res.leakage, opts.leakage_bound);
    throw NumericalContractError(msg);
  }

  const Complex e0 = h.expectation(psi);
  propagate(h, psi, cfg.t);
  const Complex e1 = h.expectation(psi);

  double norm2 = 0.0;
  for (const auto& x : psi) norm2 += std::norm(x);
  res.norm_error = std::abs(std::sqrt(norm2) - 1.0);
  if (res.norm_error > opts.norm_drift_bound) {
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "evolve: norm drift %.3g exceeds the contract bound %.3g",
                  res.norm_error, opts.norm_drift_bound);
    throw NumericalContractError(msg);
  }
  const double escale = std::max({std::abs(e0), std::abs(e1), 1.0});
  res.energy_drift = std::abs(e1 - e0) / escale;

  res.moments = measure_moments(basis, psi);
  res.joint_stokes_phonon = measure_joint(basis, psi, Mode::Stokes, Mode::Phonon);
  res.joint_pump_phonon = measure_joint(basis, psi, Mode::Pump, Mode::Phonon);
  return res;
}

OracleResult evolve_config_state(const RamanConfig& cfg, const FockBasis& basis,
                                 const EvolveOptions& opts,
                                 double mixture_tail) {
  PerMode<ModeInitial> init{};
  for (Mode m : kAllModes)
    at(init, m) = ModeInitial::coherent(cfg.amplitude(m));
  if (!cfg.chaotic()) return evolve(cfg, basis, init, opts);

  const double n = cfg.phonon.mean_occupation;
  if (n == 0.0) {
    at(init, Mode::Phonon) = ModeInitial::fock(0);
    return evolve(cfg, basis, init, opts);
  }

  // Thermal phonon mixture over Fock components.
  std::vector<double> w;
  double cum = 0.0;
  const int headroom = 2;  // pair creation during the run
  const int max_comp = basis.cutoff[index_of(Mode::Phonon)] - headroom;
  for (int k = 0; cum < 1.0 - mixture_tail; ++k) {
    if (k > max_comp)
      throw NumericalContractError(
          "evolve_config_state: phonon cutoff too small to carry the thermal "
          "mixture to the requested weight");
    const double wk = std::pow(n / (1.0 + n), k) / (1.0 + n);
    w.push_back(wk);
    cum += wk;
  }

  OracleResult acc;
  bool first = true;
  for (std::size_t k = 0; k < w.size(); ++k) {
    at(init, Mode::Phonon) = ModeInitial::fock(static_cast<int>(k));
    OracleResult r = evolve(cfg, basis, init, opts);
    if (first) {
      acc.joint_stokes_phonon = r.joint_stokes_phonon;
      acc.joint_pump_phonon = r.joint_pump_phonon;
      for (auto& x : acc.joint_stokes_phonon.p) x = 0.0;
      for (auto& x : acc.joint_pump_phonon.p) x = 0.0;
      first = false;
    }
    accumulate(acc, r, w[k] / cum);
  }
  return acc;
}

namespace {

double fit_exponent(const std::vector<double>& gt,
                    const std::vector<double>& err, double floor,
                    bool* below_floor) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    if (err[i] > floor) {
      lx.push_back(std::log(gt[i]));
      ly.push_back(std::log(err[i]));
    }
  }
  if (lx.size() < 2) {
    *below_floor = true;
    return std::numeric_limits<double>::infinity();
  }
  *below_floor = false;
  const double n = static_cast<double>(lx.size());
  const double sx = std::accumulate(lx.begin(), lx.end(), 0.0);
  const double sy = std::accumulate(ly.begin(), ly.end(), 0.0);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

CompareReport compare(const RamanConfig& cfg, const FockBasis& basis,
                      const CompareOptions& opts) {
  CompareReport rep;
  rep.gt_values = opts.gt_values;

  std::vector<std::string> names;
  for (Mode m : kAllModes) names.push_back("mean_" + mode_name(m));
  for (Mode m : kAllModes) names.push_back("occ_" + mode_name(m));
  for (Mode m : kAllModes) names.push_back("anom_" + mode_name(m));
  for (ModePair p : kAllPairs) names.push_back("cross_normal_" + pair_name(p));
  for (ModePair p : kAllPairs) names.push_back("cross_anom_" + pair_name(p));
  std::vector<std::vector<double>> errs(names.size());

  for (double gt : opts.gt_values) {
    RamanConfig c = cfg;
    c.t = gt / std::abs(cfg.g);
    const OracleResult oracle = evolve_config_state(c, basis, opts.evolve);
    const CoeffSet k = eval_coeffs(c);
    const GaussianMoments pred = predicted_moments(noise_terms(c, k));

    std::size_t q = 0;
    for (Mode m : kAllModes)
      errs[q++].push_back(std::abs(at(pred.mean, m) - at(oracle.moments.mean, m)));
    for (Mode m : kAllModes)
      errs[q++].push_back(
          std::abs(at(pred.occupation, m) - at(oracle.moments.occupation, m)));
    for (Mode m : kAllModes)
      errs[q++].push_back(
          std::abs(at(pred.anomalous, m) - at(oracle.moments.anomalous, m)));
    for (ModePair p : kAllPairs)
      errs[q++].push_back(std::abs(at(pred.cross_normal, p) -
                                   at(oracle.moments.cross_normal, p)));
    for (ModePair p : kAllPairs)
      errs[q++].push_back(std::abs(at(pred.cross_anomalous, p) -
                                   at(oracle.moments.cross_anomalous, p)));
    rep.max_norm_error = std::max(rep.max_norm_error, oracle.norm_error);
    rep.max_energy_drift = std::max(rep.max_energy_drift, oracle.energy_drift);
  }

  rep.pass = true;
  for (std::size_t q = 0; q < names.size(); ++q) {
    QuantityScaling row;
    row.name = names[q];
    row.abs_error = errs[q];
    row.exponent = fit_exponent(opts.gt_values, errs[q], opts.error_floor,
                                &row.below_floor);
    row.pass = row.below_floor || row.exponent >= opts.min_exponent;
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

double cutoff_sensitivity(const RamanConfig& cfg, const FockBasis& basis,
                          const EvolveOptions& opts) {
  const OracleResult base = evolve_config_state(cfg, basis, opts);
  std::array<int, 4> raised = basis.cutoff;
  for (auto& c : raised) ++c;
  const FockBasis bigger(raised);
  const OracleResult fine = evolve_config_state(cfg, bigger, opts);

  double worst = 0.0;
  auto rel = [](Complex a, Complex b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-12});
    return std::abs(a - b) / scale;
  };
  for (Mode m : kAllModes) {
    worst = std::max(worst, rel(at(base.moments.mean, m), at(fine.moments.mean, m)));
    worst = std::max(worst, rel(at(base.moments.occupation, m),
                                at(fine.moments.occupation, m)));
    worst = std::max(worst, rel(at(base.moments.anomalous, m),
                                at(fine.moments.anomalous, m)));
  }
  for (ModePair p : kAllPairs) {
    worst = std::max(worst, rel(at(base.moments.cross_normal, p),
                                at(fine.moments.cross_normal, p)));
    worst = std::max(worst, rel(at(base.moments.cross_anomalous, p),
                                at(fine.moments.cross_anomalous, p)));
  }
  return worst;
}

}  // namespace raman
