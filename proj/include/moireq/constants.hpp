#pragma once

// Unit system used throughout the library:
//   energy      meV
//   length      nm
//   time        ps
//   temperature K
//   magnetic    T
// Angles cross API boundaries in degrees and are converted to radians
// internally.

namespace moireq {

struct PhysConstants {
  // hbar in meV ps
  static constexpr double hbar = 0.6582119569;
  // Boltzmann constant in meV / K
  static constexpr double kB = 0.08617333;
  // Bohr magneton in meV / T
  static constexpr double muB = 0.05788382;
  // Planck constant in meV s (for frequencies quoted in Hz / GHz)
  static constexpr double h = 4.135667696e-12;
  // hbar^2 / (2 m_e) in meV nm^2; divide by an effective-mass ratio to get
  // the kinetic prefactor of a parabolic band
  static constexpr double c_kin = 38.0998;

  // Bohr magneton over Planck constant, GHz / T
  static constexpr double muB_over_h_GHz = muB / h * 1e-9;
};

static_assert(PhysConstants::hbar > 0.658211 && PhysConstants::hbar < 0.658212,
              "hbar (meV ps) out of range");
static_assert(PhysConstants::kB > 0.0861733 && PhysConstants::kB < 0.0861734,
              "kB (meV/K) out of range");

// Runtime cross-checks between the constants (h == 2*pi*hbar etc.).
// Returns true when every identity holds to 1e-9 relative accuracy.
bool constants_consistent();

}  // namespace moireq
