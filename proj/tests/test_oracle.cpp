#include <map>

#include "doctest.h"
#include "raman/oracle.hpp"
#include "test_support.hpp"

using namespace raman;
using test::amps;
using test::rel_diff;

namespace {

// Free four-mode configuration (couplings switched off); built directly
// since the validated constructor requires a positive coupling scale.
RamanConfig free_cfg() {
  RamanConfig cfg;
  cfg.g = {0.0, 0.0};
  cfg.chi = {0.0, 0.0};
  cfg.dw1 = cfg.dw2 = 0.0;
  cfg.omega = {3.7, 2.9, 1.1, 5.3};
  cfg.t = 0.3;
  cfg.xi0 = {Complex{0.3, 0.0}, Complex{0.0, 0.2}, Complex{0.0, 0.0},
             Complex{0.0, 0.0}};
  cfg.phonon = PhononState::coherent();
  return cfg;
}

RamanConfig small_cfg(double gt, Complex chi = {0.8, 0.0}) {
  PerMode<Complex> a{Complex{0.5, 0.0}, Complex{0.3, 0.0}, Complex{0.2, 0.0},
                     Complex{0.2, 0.0}};
  return make_config({1, 0}, chi, 3.0, 5.0, 1.0, gt, a,
                     PhononState::coherent());
}

std::map<std::pair<std::size_t, std::size_t>, Complex> to_map(
    const SparseHamiltonian& h) {
  std::map<std::pair<std::size_t, std::size_t>, Complex> m;
  for (std::size_t r = 0; r < h.dim; ++r)
    for (std::size_t k = h.row_ptr[r]; k < h.row_ptr[r + 1]; ++k)
      m[{r, h.col[k]}] = h.val[k];
  return m;
}

}  // namespace

TEST_CASE("basis indexing is bijective and capped") {
  const FockBasis basis({3, 2, 4, 1});
  CHECK(basis.dim == 4u * 3u * 5u * 2u);
  for (std::size_t idx = 0; idx < basis.dim; ++idx) {
    std::array<int, 4> occ{};
    for (Mode m : kAllModes) occ[index_of(m)] = basis.occupation(idx, m);
    CHECK(basis.index(occ) == idx);
  }
  CHECK_THROWS_AS(FockBasis({40, 40, 40, 40}), ValidationError);
  CHECK_THROWS_AS(FockBasis({0, 2, 2, 2}), ValidationError);
}

TEST_CASE("free Hamiltonian is diagonal") {
  const FockBasis basis({2, 2, 2, 2});
  const auto h = build_hamiltonian(free_cfg(), basis);
  for (std::size_t r = 0; r < h.dim; ++r)
    for (std::size_t k = h.row_ptr[r]; k < h.row_ptr[r + 1]; ++k)
      CHECK(h.col[k] == r);
}

TEST_CASE("Hamiltonian is Hermitian") {
  const auto cfg = make_config({0.7, 0.4}, {0.2, -0.9}, 3.0, 5.0, 1.0, 0.1,
                               amps(0.3, 0.2, 0.1, 0.1),
                               PhononState::coherent());
  const FockBasis basis({3, 3, 3, 3});
  const auto h = build_hamiltonian(cfg, basis);
  const auto m = to_map(h);
  for (const auto& [rc, v] : m) {
    const auto it = m.find({rc.second, rc.first});
    REQUIRE(it != m.end());
    CHECK(std::abs(v - std::conj(it->second)) <= 1e-14);
  }
}

TEST_CASE("single-excitation matrix elements carry the couplings") {
  const Complex g{0.7, 0.4};
  const Complex chi{0.2, -0.9};
  const auto cfg = make_config(g, chi, 3.0, 5.0, 1.0, 0.1, amps(0, 0, 0, 0),
                               PhononState::coherent());
  const FockBasis basis({1, 1, 1, 1});
  const auto m = to_map(build_hamiltonian(cfg, basis));

  const std::size_t pump = basis.index({1, 0, 0, 0});
  const std::size_t pair = basis.index({0, 1, 1, 0});
  CHECK(std::abs(m.at({pair, pump}) - (-g)) < 1e-15);
  CHECK(std::abs(m.at({pump, pair}) - (-std::conj(g))) < 1e-15);

  const std::size_t lv = basis.index({1, 0, 1, 0});
  const std::size_t a = basis.index({0, 0, 0, 1});
  CHECK(std::abs(m.at({a, lv}) - (-std::conj(chi))) < 1e-15);
  CHECK(std::abs(m.at({lv, a}) - (-chi)) < 1e-15);
}

TEST_CASE("free evolution rotates coherent amplitudes exactly") {
  const auto cfg = free_cfg();
  const FockBasis basis({13, 13, 1, 1});
  PerMode<ModeInitial> init{};
  for (Mode m : kAllModes) at(init, m) = ModeInitial::coherent(cfg.amplitude(m));
  const auto res = evolve(cfg, basis, init);
  CHECK(res.norm_error <= 1e-10);
  for (Mode m : kAllModes) {
    const Complex want = cfg.amplitude(m) *
                         std::exp(Complex{0.0, -cfg.frequency(m) * cfg.t});
    CHECK(std::abs(at(res.moments.mean, m) - want) < 1e-10);
  }
}

TEST_CASE("norm, energy and the photon-number invariant are conserved") {
  const auto cfg = small_cfg(0.08);
  const FockBasis basis({8, 5, 4, 4});
  const auto h = build_hamiltonian(cfg, basis);

  PerMode<ModeInitial> init{};
  for (Mode m : kAllModes) at(init, m) = ModeInitial::coherent(cfg.amplitude(m));
  double leak = 0.0;
  auto psi0 = product_state(basis, init, &leak);
  CHECK(leak < 1e-8);

  // d<N>/dt = i<[H, N]> with N = n_L + n_S + n_A; evaluated as a matrix
  // commutator on the initial state it must vanish identically.
  std::vector<Complex> hpsi;
  h.apply(psi0, hpsi);
  Complex hn{0.0, 0.0}, nh{0.0, 0.0};
  for (std::size_t i = 0; i < basis.dim; ++i) {
    const double n = basis.occupation(i, Mode::Pump) +
                     basis.occupation(i, Mode::Stokes) +
                     basis.occupation(i, Mode::AntiStokes);
    hn += std::conj(psi0[i]) * n * hpsi[i];   // <N H>
    nh += std::conj(hpsi[i]) * n * psi0[i];   // <H N>
  }
  CHECK(std::abs(hn - nh) < 1e-10);

  const auto res = evolve(cfg, basis, init);
  CHECK(res.norm_error <= 1e-10);
  CHECK(res.energy_drift <= 1e-9);

  auto total = [&](const OracleResult& r) {
    return at(r.moments.occupation, Mode::Pump) +
           at(r.moments.occupation, Mode::Stokes) +
           at(r.moments.occupation, Mode::AntiStokes);
  };
  RamanConfig frozen = cfg;
  frozen.t = 0.0;
  const auto res0 = evolve(frozen, basis, init);
  CHECK(rel_diff(total(res), total(res0)) < 1e-9);
}

TEST_CASE("spontaneous Stokes pair probability matches the geometric law") {
  PerMode<Complex> a{Complex{0.5, 0.0}, {}, {}, {}};
  const auto cfg = make_config({1, 0}, {1, 0}, 10.0, 10.0, 1.0, 0.05, a,
                               PhononState::coherent());
  const FockBasis basis({8, 3, 3, 2});
  const auto res = evolve_config_state(cfg, basis);

  const double b_s =
      4.0 * 0.25 * std::pow(std::sin(0.5 * cfg.dw1 * cfg.t), 2) /
      (cfg.dw1 * cfg.dw1);
  const double predicted = b_s / ((1.0 + b_s) * (1.0 + b_s));
  CHECK(rel_diff(res.joint_stokes_phonon.at(1, 1), predicted) < 0.05);
  // pair correlation: the off-diagonal stays far below the diagonal
  CHECK(res.joint_stokes_phonon.at(1, 0) < 0.05 * predicted);
}

TEST_CASE("leakage and dimension contracts") {
  PerMode<Complex> a{Complex{2.0, 0.0}, {}, {}, {}};  // needs ~14 levels
  const auto cfg = make_config({1, 0}, {1, 0}, 3.0, 5.0, 1.0, 0.01, a,
                               PhononState::coherent());
  const FockBasis basis({3, 2, 2, 2});
  CHECK_THROWS_AS(evolve_config_state(cfg, basis), NumericalContractError);
}

TEST_CASE("perturbative moments converge with third-order scaling") {
  const auto cfg = small_cfg(0.0);
  const FockBasis basis({10, 7, 6, 5});
  CompareOptions opts;
  opts.gt_values = {0.01, 0.02, 0.04};
  const auto rep = compare(cfg, basis, opts);
  CHECK(rep.max_norm_error <= 1e-10);
  CHECK(rep.max_energy_drift <= 1e-9);
  for (const auto& row : rep.rows) {
    INFO(row.name, " exponent ", row.exponent);
    CHECK(row.pass);
  }
  CHECK(rep.pass);
}

TEST_CASE("chaotic mixture comparison also converges") {
  PerMode<Complex> a{Complex{0.5, 0.0}, Complex{0.3, 0.0}, {},
                     Complex{0.2, 0.0}};
  const auto cfg = make_config({1, 0}, {0.8, 0.0}, 3.0, 5.0, 1.0, 0.0, a,
                               PhononState::chaotic(0.2));
  const FockBasis basis({10, 7, 16, 6});
  CompareOptions opts;
  opts.gt_values = {0.01, 0.02, 0.04};
  const auto rep = compare(cfg, basis, opts);
  for (const auto& row : rep.rows) {
    INFO(row.name, " exponent ", row.exponent);
    CHECK(row.pass);
  }
}

TEST_CASE("free configuration shows no discrepancy at all") {
  RamanConfig cfg = free_cfg();
  const FockBasis basis({10, 10, 1, 1});
  const auto oracle = evolve_config_state(cfg, basis);
  const auto pred = predicted_moments(noise_terms(cfg, eval_coeffs(cfg)));
  for (Mode m : kAllModes) {
    CHECK(std::abs(at(pred.mean, m) - at(oracle.moments.mean, m)) < 1e-9);
    CHECK(std::abs(at(pred.occupation, m) - at(oracle.moments.occupation, m)) <
          1e-9);
  }
}

TEST_CASE("cutoff robustness of a converged run") {
  const auto cfg = small_cfg(0.04);
  const FockBasis basis({10, 7, 6, 5});
  CHECK(cutoff_sensitivity(cfg, basis) < 1e-6);
}
