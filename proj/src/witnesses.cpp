#include "raman/witnesses.hpp"

namespace raman {

std::pair<double, double> entanglement(const NoiseTerms& nt, ModePair p) {
  const Mode i = first_of(p);
  const Mode j = second_of(p);
  const double ci = std::abs(nt.c(i));
  const double cj = std::abs(nt.c(j));
  const double d = std::abs(nt.d(p));
  const double db = std::abs(nt.dbar(p));
  const double kp = (nt.b(i) + ci) * (nt.b(j) + cj) - (d - db) * (d - db);
  const double km = (nt.b(i) - ci) * (nt.b(j) - cj) - (d + db) * (d + db);
  return {kp, km};
}

double sub_shot(const NoiseTerms& nt, ModePair p) {
  const Mode i = first_of(p);
  const Mode j = second_of(p);
  return nt.b(i) * nt.b(i) + nt.b(j) * nt.b(j) + std::norm(nt.c(i)) +
         std::norm(nt.c(j)) - 2.0 * std::norm(nt.d(p)) -
         2.0 * std::norm(nt.dbar(p));
}

double squeezing_single(const NoiseTerms& nt, Mode m) {
  return 1.0 + 2.0 * (nt.b(m) - std::abs(nt.c(m)));
}

double squeezing_pair(const NoiseTerms& nt, ModePair p, PairSqueezeTerm term) {
  const Mode i = first_of(p);
  const Mode j = second_of(p);
  const double cross = term == PairSqueezeTerm::RealPart
                           ? nt.dbar(p).real()
                           : std::abs(nt.dbar(p));
  return 1.0 + nt.b(i) + nt.b(j) - 2.0 * cross -
         std::abs(nt.c(i) + nt.c(j) + 2.0 * nt.d(p));
}

double wave_variance(const NoiseTerms& nt, Mode m) {
  const Complex xi = nt.xi(m);
  return nt.b(m) * nt.b(m) + std::norm(nt.c(m)) +
         2.0 * nt.b(m) * std::norm(xi) +
         2.0 * (nt.c(m) * std::conj(xi) * std::conj(xi)).real();
}

double wave_covariance(const NoiseTerms& nt, ModePair p) {
  const Complex xi_i = nt.xi(first_of(p));
  const Complex xi_j = nt.xi(second_of(p));
  return std::norm(nt.d(p)) - std::norm(nt.dbar(p)) +
         2.0 * (nt.d(p) * std::conj(xi_i) * std::conj(xi_j) -
                nt.dbar(p) * xi_i * std::conj(xi_j))
                   .real();
}

std::pair<double, double> sum_diff_variance(const NoiseTerms& nt, ModePair p) {
  const double vi = wave_variance(nt, first_of(p));
  const double vj = wave_variance(nt, second_of(p));
  const double c = wave_covariance(nt, p);
  return {vi + vj + 2.0 * c, vi + vj - 2.0 * c};
}

WitnessReport witness_report(const NoiseTerms& nt, PairSqueezeTerm term) {
  WitnessReport r;
  for (Mode m : kAllModes) {
    at(r.lambda_single, m) = squeezing_single(nt, m);
    at(r.varW, m) = wave_variance(nt, m);
  }
  for (ModePair p : kAllPairs) {
    const auto [kp, km] = entanglement(nt, p);
    at(r.K_plus, p) = kp;
    at(r.K_minus, p) = km;
    at(r.C_shot, p) = sub_shot(nt, p);
    at(r.lambda_pair, p) = squeezing_pair(nt, p, term);
    at(r.covW, p) = wave_covariance(nt, p);
    const auto [sv, dv] = sum_diff_variance(nt, p);
    at(r.sumvar, p) = sv;
    at(r.diffvar, p) = dv;
  }
  return r;
}

namespace {

struct Entry {
  double B_L, B_S, B_V;
  Complex C_L, C_V, D_LV, D_SV, Dbar_LV;
};

// Substituted characteristic-function entries for the L/V and S/V
// witnesses, written out directly in terms of the coefficients.
Entry substituted_entries(const RamanConfig& cfg, const CoeffSet& k) {
  const Complex xL = cfg.amplitude(Mode::Pump);
  const Complex xS = cfg.amplitude(Mode::Stokes);
  const Complex xV = cfg.amplitude(Mode::Phonon);
  const Complex xA = cfg.amplitude(Mode::AntiStokes);
  const double IL = cfg.intensity(Mode::Pump);
  const double IS = cfg.intensity(Mode::Stokes);
  const double IA = cfg.intensity(Mode::AntiStokes);

  Entry e;
  if (!cfg.chaotic()) {
    e.B_L = std::norm(k.f3) * IA;
    e.B_S = std::norm(k.g2) * IL;
    e.B_V = std::norm(k.h2) * IL + std::norm(k.h3) * IA;
    e.C_L = (k.f2 * k.f3 + k.f1 * k.f4) * xS * xA;
    e.C_V = (k.h2 * k.h3 + k.h1 * k.h4) * std::conj(xS) * xA;
    e.D_LV = k.f1 * k.h3 * xA +
             (k.f1 * k.h5 + k.f1 * k.h8 + k.f2 * k.h2) * xL * xV;
    e.D_SV = k.g1 * k.h2 * xL + k.g1 * k.h6 * xS * xV +
             (k.g1 * k.h4 + k.g2 * k.h3) * std::conj(xV) * xA;
    e.Dbar_LV = Complex{0.0, 0.0};
    return e;
  }
  const double n = cfg.phonon.mean_occupation;
  e.B_L = std::norm(k.f2) * IS * n + std::norm(k.f3) * IA * (n + 1.0);
  e.B_S = std::norm(k.g2) * IL * (n + 1.0);
  e.B_V = n + std::norm(k.h2) * (IL + n * (IL - IS)) +
          std::norm(k.h3) * (IA + n * (IA - IL));
  e.C_L = (k.f2 * k.f3 * (2.0 * n + 1.0) + k.f1 * k.f4) * xS * xA;
  e.C_V = (k.h2 * k.h3 + k.h1 * k.h4 * (2.0 * n + 1.0)) * std::conj(xS) * xA;
  e.D_LV = k.f1 * k.h3 * (n + 1.0) * xA;
  e.D_SV = k.g1 * k.h2 * (n + 1.0) * xL;
  e.Dbar_LV = std::conj(k.f2) * k.h1 * n * std::conj(xS);
  return e;
}

}  // namespace

std::map<std::string, double> closed_forms(const RamanConfig& cfg,
                                           const CoeffSet& k) {
  const Entry e = substituted_entries(cfg, k);
  const PerMode<Complex> xi = mean_fields(cfg, k);
  const Complex xiL = at(xi, Mode::Pump);
  const Complex xiV = at(xi, Mode::Phonon);
  const double IS = cfg.intensity(Mode::Stokes);
  const double IA = cfg.intensity(Mode::AntiStokes);
  const double aS = std::sqrt(IS);
  const double aA = std::sqrt(IA);

  std::map<std::string, double> out;

  const double cl = std::abs(e.C_L);
  const double cv = std::abs(e.C_V);
  const double dlv = std::abs(e.D_LV);
  const double dblv = std::abs(e.Dbar_LV);
  out["k_lv_plus"] =
      (e.B_L + cl) * (e.B_V + cv) - (dlv - dblv) * (dlv - dblv);
  out["k_lv_minus"] =
      (e.B_L - cl) * (e.B_V - cv) - (dlv + dblv) * (dlv + dblv);
  const double dsv = std::abs(e.D_SV);
  out["k_sv_plus"] = e.B_S * (e.B_V + cv) - dsv * dsv;
  out["k_sv_minus"] = e.B_S * (e.B_V - cv) - dsv * dsv;

  if (!cfg.chaotic()) {
    out["lambda_l"] = 1.0 + 2.0 * std::norm(k.f3) * IA -
                      2.0 * std::abs(k.f2 * k.f3 + k.f1 * k.f4) * aS * aA;
    out["lambda_v"] = 1.0 + 2.0 * e.B_V -
                      2.0 * std::abs(k.h2 * k.h3 + k.h1 * k.h4) * aS * aA;
    out["varw_v"] = e.B_V * e.B_V + cv * cv + 2.0 * e.B_V * std::norm(xiV) +
                    2.0 * (e.C_V * std::conj(xiV) * std::conj(xiV)).real();
  } else {
    const double n = cfg.phonon.mean_occupation;
    out["lambda_l"] =
        1.0 +
        2.0 * (std::norm(k.f3) * IA * (n + 1.0) + std::norm(k.f2) * n * IS) -
        2.0 * std::abs(k.f2 * k.f3 * (2.0 * n + 1.0) + k.f1 * k.f4) * aS * aA;
    out["c_lv"] = e.B_L * e.B_L + e.B_V * e.B_V + cl * cl + cv * cv -
                  2.0 * dlv * dlv - 2.0 * dblv * dblv;
    out["c_sv"] = e.B_S * e.B_S + e.B_V * e.B_V + cv * cv - 2.0 * dsv * dsv;
    const double ba = std::norm(k.l2) * cfg.intensity(Mode::Pump) * n;
    const double dbva =
        std::abs(k.h1 * std::conj(k.l2) * n) * std::abs(cfg.amplitude(Mode::Pump));
    out["c_va"] = e.B_V * e.B_V + ba * ba + cv * cv - 2.0 * dbva * dbva;
  }

  out["varw_l"] = e.B_L * e.B_L + cl * cl + 2.0 * e.B_L * std::norm(xiL) +
                  2.0 * (e.C_L * std::conj(xiL) * std::conj(xiL)).real();
  return out;
}

}  // namespace raman
