#include "raman/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace raman {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZeroTol = 1e-12;   // entries that must vanish in-regime
constexpr double kMatchTol = 1e-9;   // relative, for regime identities

double rel_mismatch(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

// x^p with the 0^0 = 1 convention and no NaN for x = 0, p > 0.
double pow_nonneg(double x, double p) {
  if (x == 0.0) return p == 0.0 ? 1.0 : 0.0;
  return std::pow(x, p);
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double JointNumberDist::total_mass() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

double QuasiDistGrid::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

double stokes_phonon_intensity(const NoiseTerms& nt) {
  const double bs = nt.b(Mode::Stokes);
  const double bv = nt.b(Mode::Phonon);
  if (rel_mismatch(bs, bv) > kMatchTol)
    throw RegimeError(
        "Stokes-phonon statistics need the spontaneous phonon-vacuum regime "
        "(B_S = B_V); got unequal occupations");
  if (std::abs(nt.c(Mode::Stokes)) > kZeroTol ||
      std::abs(nt.c(Mode::Phonon)) > kZeroTol ||
      std::abs(nt.dbar(ModePair::StokesPhonon)) > kZeroTol)
    throw RegimeError(
        "Stokes-phonon statistics need vanishing anomalous single-mode and "
        "normal cross terms");
  return bs;
}

std::pair<double, double> pump_phonon_intensities(const NoiseTerms& nt) {
  const double bl = nt.b(Mode::Pump);
  const double bv = nt.b(Mode::Phonon);
  if (bv < bl)
    throw RegimeError(
        "pump-phonon statistics need B_V >= B_L (partial-spontaneous "
        "phonon-vacuum regime violated)");
  if (std::abs(nt.c(Mode::Pump)) > kZeroTol ||
      std::abs(nt.c(Mode::Phonon)) > kZeroTol ||
      std::abs(nt.dbar(ModePair::PumpPhonon)) > kZeroTol)
    throw RegimeError(
        "pump-phonon statistics need vanishing anomalous single-mode and "
        "normal cross terms");
  return {bl, bv};
}

JointNumberDist joint_sv(const NoiseTerms& nt, int cutoff) {
  if (cutoff < 1) throw ValidationError("joint_sv: cutoff must be >= 1");
  const double b = stokes_phonon_intensity(nt);

  JointNumberDist d;
  d.rows = d.cols = cutoff;
  d.row_mode = Mode::Stokes;
  d.col_mode = Mode::Phonon;
  d.probs.assign(static_cast<std::size_t>(cutoff + 1) * (cutoff + 1), 0.0);
  for (int n = 0; n <= cutoff; ++n)
    d.probs[static_cast<std::size_t>(n) * (cutoff + 1) + n] =
        pow_nonneg(b, n) / std::pow(1.0 + b, n + 1);
  d.tail_bound = pow_nonneg(b / (1.0 + b), cutoff + 1);
  return d;
}

JointNumberDist joint_lv(const NoiseTerms& nt, int cutoff_l, int cutoff_v) {
  if (cutoff_l < 1 || cutoff_v < 1)
    throw ValidationError("joint_lv: cutoffs must be >= 1");
  const auto [bl, bv] = pump_phonon_intensities(nt);
  const double diff = bv - bl;

  JointNumberDist d;
  d.rows = cutoff_l;
  d.cols = cutoff_v;
  d.row_mode = Mode::Pump;
  d.col_mode = Mode::Phonon;
  d.probs.assign(static_cast<std::size_t>(cutoff_l + 1) * (cutoff_v + 1), 0.0);
  for (int nl = 0; nl <= cutoff_l; ++nl)
    for (int nv = nl; nv <= cutoff_v; ++nv)
      d.probs[static_cast<std::size_t>(nl) * (cutoff_v + 1) + nv] =
          std::exp(log_binomial(nv, nl)) * pow_nonneg(bl, nl) *
          pow_nonneg(diff, nv - nl) / std::pow(1.0 + bv, nv + 1);

  // Mass outside the window: the geometric tail of the phonon marginal
  // plus any rows with n_L > cutoff_l inside the stored phonon range.
  d.tail_bound = pow_nonneg(bv / (1.0 + bv), cutoff_v + 1);
  for (int nv = cutoff_l + 1; nv <= cutoff_v; ++nv)
    for (int nl = cutoff_l + 1; nl <= nv; ++nl)
      d.tail_bound += std::exp(log_binomial(nv, nl)) * pow_nonneg(bl, nl) *
                      pow_nonneg(diff, nv - nl) / std::pow(1.0 + bv, nv + 1);
  return d;
}

double sth_sv(const NoiseTerms& nt) {
  const double b = stokes_phonon_intensity(nt);
  return 1.0 + 2.0 * b - 2.0 * std::sqrt(b);
}

double sth_lv(const NoiseTerms& nt) {
  const auto [bl, bv] = pump_phonon_intensities(nt);
  const double bs = bv - bl;
  return 1.0 + 2.0 * bl + bs - 2.0 * std::sqrt(bl);
}

namespace {

// sin(x/sqrt(y))/x for y > 0, the positive sinh continuation for
// y < 0, with the analytic x -> 0 limit 1/sqrt(|y|).
double pair_kernel(double x, double y) {
  const double root = std::sqrt(std::abs(y));
  const double u = x / root;
  if (std::abs(u) < 1e-6) {
    const double u2 = u * u;
    return (y > 0.0 ? 1.0 - u2 / 6.0 : 1.0 + u2 / 6.0) / root;
  }
  if (y > 0.0) return std::sin(u) / x;
  return std::sinh(u) / x;  // caller handles |u| large in log space
}

}  // namespace

namespace {

double sv_point(double b, double k_sv, double s, double ws, double wv) {
  const double bs = b + 0.5 * (1.0 - s);
  const double k_s = k_sv + (1.0 - s) * b + 0.25 * (1.0 - s) * (1.0 - s);
  const double y = -k_s;
  if (y == 0.0)
    throw RegimeError("quasi_sv: ordering parameter sits exactly at the "
                      "threshold root");
  const double x = ws - wv;
  const double damping = -(ws + wv) / (2.0 * bs);
  const double u = x / std::sqrt(std::abs(y));
  if (y < 0.0 && std::abs(u) > 25.0) {
    // fused log-domain evaluation of exp(damping) sinh(u)/x
    const double lv = damping + std::abs(u) - std::log(2.0) -
                      std::log(kPi * bs * std::abs(x));
    return lv > 700.0 ? std::numeric_limits<double>::max() : std::exp(lv);
  }
  return std::exp(damping) / (kPi * bs) * pair_kernel(x, y);
}

double lv_point(double bl, double bv, double wl, double wv) {
  const double rho = std::sqrt(bv / bl);
  const double x = rho * wl - wv / rho;
  const double damping = -wl / (2.0 * bl) - wv / (2.0 * bv);
  return std::exp(damping) / (kPi * std::sqrt(bl * bv)) * pair_kernel(x, bl);
}

void check_sv_args(double s) {
  if (!(s > 0.0) || s > 1.0)
    throw ValidationError("quasi_sv: ordering parameter must be in (0, 1]");
}

std::pair<double, double> lv_checked(const NoiseTerms& nt) {
  const auto [bl, bv] = pump_phonon_intensities(nt);
  if (!(bv > bl) || !(bl > 0.0))
    throw RegimeError(
        "quasi_lv: needs B_V > B_L > 0 strictly; the formula is not defined "
        "in the degenerate limit");
  return {bl, bv};
}

}  // namespace

QuasiDistGrid quasi_sv(const NoiseTerms& nt, double s, const GridSpec& grid) {
  check_sv_args(s);
  if (grid.rows < 1 || grid.cols < 1 || grid.row_max <= 0.0 || grid.col_max <= 0.0)
    throw ValidationError("quasi_sv: invalid grid");
  const double b = stokes_phonon_intensity(nt);
  const double k_sv = nt.b(Mode::Stokes) * nt.b(Mode::Phonon) -
                      std::norm(nt.d(ModePair::StokesPhonon));

  QuasiDistGrid q;
  q.grid = grid;
  q.s = s;
  q.values.assign(static_cast<std::size_t>(grid.rows + 1) * (grid.cols + 1), 0.0);
  for (int i = 0; i <= grid.rows; ++i) {
    const double ws = grid.row_max * i / grid.rows;
    for (int j = 0; j <= grid.cols; ++j) {
      const double wv = grid.col_max * j / grid.cols;
      q.values[static_cast<std::size_t>(i) * (grid.cols + 1) + j] =
          sv_point(b, k_sv, s, ws, wv);
    }
  }
  return q;
}

QuasiDistGrid quasi_lv(const NoiseTerms& nt, const GridSpec& grid) {
  if (grid.rows < 1 || grid.cols < 1 || grid.row_max <= 0.0 || grid.col_max <= 0.0)
    throw ValidationError("quasi_lv: invalid grid");
  const auto [bl, bv] = lv_checked(nt);

  QuasiDistGrid q;
  q.grid = grid;
  q.s = 1.0;
  q.values.assign(static_cast<std::size_t>(grid.rows + 1) * (grid.cols + 1), 0.0);
  for (int i = 0; i <= grid.rows; ++i) {
    const double wl = grid.row_max * i / grid.rows;
    for (int j = 0; j <= grid.cols; ++j) {
      const double wv = grid.col_max * j / grid.cols;
      q.values[static_cast<std::size_t>(i) * (grid.cols + 1) + j] =
          lv_point(bl, bv, wl, wv);
    }
  }
  return q;
}

double quasi_sv_value(const NoiseTerms& nt, double s, double w_s, double w_v) {
  check_sv_args(s);
  if (w_s < 0.0 || w_v < 0.0)
    throw ValidationError("quasi_sv: intensities must be non-negative");
  const double b = stokes_phonon_intensity(nt);
  const double k_sv = nt.b(Mode::Stokes) * nt.b(Mode::Phonon) -
                      std::norm(nt.d(ModePair::StokesPhonon));
  return sv_point(b, k_sv, s, w_s, w_v);
}

double quasi_lv_value(const NoiseTerms& nt, double w_l, double w_v) {
  if (w_l < 0.0 || w_v < 0.0)
    throw ValidationError("quasi_lv: intensities must be non-negative");
  const auto [bl, bv] = lv_checked(nt);
  return lv_point(bl, bv, w_l, w_v);
}

double conditional_fano_pump(const NoiseTerms& nt) {
  const auto [bl, bv] = pump_phonon_intensities(nt);
  if (bv == 0.0) throw ValidationError("conditional_fano_pump: B_V = 0");
  return 1.0 - bl / bv;
}

double conditional_fano_phonon(const NoiseTerms& nt, double n_pump) {
  const auto [bl, bv] = pump_phonon_intensities(nt);
  if (bv == 0.0) throw ValidationError("conditional_fano_phonon: B_V = 0");
  if (n_pump < 0.0)
    throw ValidationError("conditional_fano_phonon: negative count");
  const double r = (1.0 + bv) / (1.0 + bl);
  return ((n_pump + 1.0) * r * r - 1.0) / ((n_pump + 1.0) * r - 1.0) - 1.0;
}

std::vector<double> conditional_pump_numbers(const NoiseTerms& nt,
                                             int n_phonon) {
  if (n_phonon < 0)
    throw ValidationError("conditional_pump_numbers: negative count");
  const auto [bl, bv] = pump_phonon_intensities(nt);
  std::vector<double> p(static_cast<std::size_t>(n_phonon) + 1, 0.0);
  if (bv == 0.0) {  // no excitation at all: conditioning on n_V = 0
    p[0] = 1.0;
    return p;
  }
  const double q = bl / bv;
  for (int k = 0; k <= n_phonon; ++k)
    p[static_cast<std::size_t>(k)] = std::exp(log_binomial(n_phonon, k)) *
                                     pow_nonneg(q, k) *
                                     pow_nonneg(1.0 - q, n_phonon - k);
  return p;
}

std::vector<double> conditional_phonon_numbers(const NoiseTerms& nt,
                                               int n_pump, int n_max) {
  if (n_pump < 0 || n_max < n_pump)
    throw ValidationError("conditional_phonon_numbers: bad count range");
  const auto [bl, bv] = pump_phonon_intensities(nt);
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1, 0.0);
  const double ratio = (bv - bl) / (1.0 + bv);
  for (int nv = n_pump; nv <= n_max; ++nv)
    p[static_cast<std::size_t>(nv)] =
        std::exp(log_binomial(nv, n_pump)) *
        std::pow((1.0 + bl) / (1.0 + bv), n_pump + 1) *
        pow_nonneg(ratio, nv - n_pump);
  return p;
}

DifferenceDist difference_dist(const NoiseTerms& nt, int n_max) {
  if (n_max < 0) throw ValidationError("difference_dist: negative cutoff");
  const auto [bl, bv] = pump_phonon_intensities(nt);
  const double m = bv - bl;
  const double tot = bv + bl;
  DifferenceDist d;
  d.p_minus.resize(static_cast<std::size_t>(n_max) + 1);
  d.p_poisson.resize(static_cast<std::size_t>(n_max) + 1);
  double poiss = std::exp(-tot);
  for (int n = 0; n <= n_max; ++n) {
    d.p_minus[static_cast<std::size_t>(n)] = pow_nonneg(m, n) / std::pow(1.0 + m, n + 1);
    d.p_poisson[static_cast<std::size_t>(n)] = poiss;
    poiss *= tot / (n + 1.0);
  }
  return d;
}

double joint_sv_density(double b_s, double n) {
  if (b_s < 0.0 || n < 0.0) return 0.0;
  return pow_nonneg(b_s, n) / std::pow(1.0 + b_s, 1.0 + n);
}

double joint_lv_density(double b_l, double b_v, double n_l, double n_v) {
  if (n_l < 0.0 || n_v < n_l || b_l < 0.0 || b_v < b_l) return 0.0;
  return std::exp(log_binomial(n_v, n_l)) * pow_nonneg(b_l, n_l) *
         pow_nonneg(b_v - b_l, n_v - n_l) / std::pow(1.0 + b_v, 1.0 + n_v);
}

double conditional_pump_density(double b_l, double b_v, double n_l,
                                double n_v) {
  if (n_l < 0.0 || n_v < n_l || b_v <= 0.0) return 0.0;
  const double q = b_l / b_v;
  return std::exp(log_binomial(n_v, n_l)) * pow_nonneg(q, n_l) *
         pow_nonneg(1.0 - q, n_v - n_l);
}

double conditional_phonon_density(double b_l, double b_v, double n_l,
                                  double n_v) {
  if (n_l < 0.0 || n_v < n_l || b_v < b_l) return 0.0;
  return std::exp(log_binomial(n_v, n_l)) *
         std::pow((1.0 + b_l) / (1.0 + b_v), n_l + 1.0) *
         pow_nonneg((b_v - b_l) / (1.0 + b_v), n_v - n_l);
}

double difference_density(double b_l, double b_v, double n) {
  if (n < 0.0 || b_v < b_l) return 0.0;
  const double m = b_v - b_l;
  return pow_nonneg(m, n) / std::pow(1.0 + m, n + 1.0);
}

double poisson_density(double b_l, double b_v, double n) {
  if (n < 0.0) return 0.0;
  const double tot = b_v + b_l;
  if (tot == 0.0) return n == 0.0 ? 1.0 : 0.0;
  return std::exp(n * std::log(tot) - tot - std::lgamma(n + 1.0));
}

}  // namespace raman
