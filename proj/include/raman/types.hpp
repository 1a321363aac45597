#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace raman {

using Complex = std::complex<double>;

/// The four interacting bosonic modes, in the canonical pair ordering
/// pump < Stokes < phonon < anti-Stokes.
enum class Mode : int { Pump = 0, Stokes = 1, Phonon = 2, AntiStokes = 3 };

inline constexpr std::array<Mode, 4> kAllModes{Mode::Pump, Mode::Stokes,
                                               Mode::Phonon, Mode::AntiStokes};

/// Ordered mode pairs (first < second in the canonical ordering).
enum class ModePair : int {
  PumpStokes = 0,
  PumpPhonon = 1,
  PumpAntiStokes = 2,
  StokesPhonon = 3,
  StokesAntiStokes = 4,
  PhononAntiStokes = 5,
};

inline constexpr std::array<ModePair, 6> kAllPairs{
    ModePair::PumpStokes,       ModePair::PumpPhonon,
    ModePair::PumpAntiStokes,   ModePair::StokesPhonon,
    ModePair::StokesAntiStokes, ModePair::PhononAntiStokes};

constexpr int index_of(Mode m) { return static_cast<int>(m); }
constexpr int index_of(ModePair p) { return static_cast<int>(p); }

constexpr Mode first_of(ModePair p) {
  switch (p) {
    case ModePair::PumpStokes:
    case ModePair::PumpPhonon:
    case ModePair::PumpAntiStokes: return Mode::Pump;
    case ModePair::StokesPhonon:
    case ModePair::StokesAntiStokes: return Mode::Stokes;
    default: return Mode::Phonon;
  }
}

constexpr Mode second_of(ModePair p) {
  switch (p) {
    case ModePair::PumpStokes: return Mode::Stokes;
    case ModePair::PumpPhonon:
    case ModePair::StokesPhonon: return Mode::Phonon;
    default: return Mode::AntiStokes;
  }
}

/// Pair formed by two distinct modes, in canonical order.
constexpr ModePair pair_of(Mode a, Mode b) {
  const int i = index_of(a) < index_of(b) ? index_of(a) : index_of(b);
  const int j = index_of(a) < index_of(b) ? index_of(b) : index_of(a);
  // (i,j) with i<j maps to i*(5-i)/2 + j - i - 1 over the 4-mode set.
  return static_cast<ModePair>(i * (5 - i) / 2 + j - i - 1);
}

inline std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Pump: return "L";
    case Mode::Stokes: return "S";
    case Mode::Phonon: return "V";
    default: return "A";
  }
}

inline std::string pair_name(ModePair p) {
  return mode_name(first_of(p)) + mode_name(second_of(p));
}

template <class T>
using PerMode = std::array<T, 4>;

template <class T>
using PerPair = std::array<T, 6>;

template <class T>
constexpr T& at(PerMode<T>& a, Mode m) { return a[index_of(m)]; }
template <class T>
constexpr const T& at(const PerMode<T>& a, Mode m) { return a[index_of(m)]; }
template <class T>
constexpr T& at(PerPair<T>& a, ModePair p) { return a[index_of(p)]; }
template <class T>
constexpr const T& at(const PerPair<T>& a, ModePair p) { return a[index_of(p)]; }

/// Invalid inputs: non-finite values, violated preconditions, bad files.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Inputs outside the regime in which a formula is derived
/// (e.g. pump-phonon statistics requested with B_V < B_L).
struct RegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical accuracy contract was not met (norm drift, truncation
/// leakage, unconverged cutoffs).
struct NumericalContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(double x, const char* what) {
  if (!is_finite(x)) throw ValidationError(std::string(what) + " must be finite");
}
inline void require_finite(const Complex& z, const char* what) {
  if (!is_finite(z)) throw ValidationError(std::string(what) + " must be finite");
}

}  // namespace raman
