#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moireq/geometry.hpp"
#include "moireq/symmetry.hpp"

namespace moireq {

enum class Spin { Down, Up };

const char* to_string(Spin s);

/// One bound level of the dot: an orbital (with its irrep) plus a spin tag.
struct Level {
  std::string label;
  std::string irrep;
  Spin spin = Spin::Down;
  double g = 2.0;           ///< Lande factor of the orbital
  double energy_mev = 0.0;  ///< orbital energy at zero field
};

/// Level scheme for optical pumping and readout. Dipole allowedness between
/// orbitals follows from the irreps and the point group; spin-flip decay is
/// suppressed by the `leak` branching fraction.
struct LevelScheme {
  std::vector<Level> levels;
  PointGroup point_group = PointGroup::D4;
  double radiative_rate = 1e-3;  ///< spontaneous decay, 1/ps
  double leak = 1e-3;            ///< spin-flip branching fraction

  /// Two spin-split manifolds: ground (irrep A2, g = 2) at 0 meV and an
  /// excited orbital (irrep E, g = 1.63) at 78 meV.
  static LevelScheme default_scheme();

  int index_of(const std::string& label) const;  // throws on unknown label
  double ground_energy() const;
};

struct TransitionLine {
  std::string lower;
  std::string upper;
  double energy_mev = 0.0;
  double frequency_ghz = 0.0;
  bool spin_conserving = false;
};

/// Zeeman-resolved optical lines at field B. Level energies shift by
/// +/- g muB B / 2 (spin up shifts up); a line appears for every
/// dipole-allowed pair of orbitals, in all four spin combinations.
std::vector<TransitionLine> level_frequencies(const LevelScheme& scheme,
                                              double b_tesla);

struct PumpOptions {
  std::string drive_lower;
  std::string drive_upper;
  double drive_rate = 0.1;    ///< stimulated rate on the driven line, 1/ps
  double duration_ps = 1e6;
  double dt_ps = 0.0;         ///< integration step; 0 selects one automatically
  double ionize_rate = 0.0;   ///< loss from excited levels to the dark pool, 1/ps
  int samples = 200;          ///< stored time points
};

struct PumpResult {
  std::vector<std::string> labels;   ///< level labels plus "dark"
  std::vector<double> times_ps;
  /// populations[i] is the time series of labels[i]
  std::vector<std::vector<double>> populations;
  double spin_polarization = 0.0;    ///< final spin-down bound population
  double charge_survival = 0.0;      ///< final bound (non-dark) population
};

/// Classical rate equations for optical pumping, integrated with fixed-step
/// RK4. Starts from an even spin mixture over the ground manifold. Spontaneous
/// decay runs on every dipole-allowed downward pair at radiative_rate
/// (spin-conserving) or leak * radiative_rate (spin-flip); the named line is
/// driven stimulated in both directions.
PumpResult simulate_pumping(const LevelScheme& scheme, const PumpOptions& opt);

struct ReadoutOptions {
  double cycle_rate = 0.05;    ///< emitted-photon rate while cycling, 1/ps
  double collection = 0.01;    ///< detection efficiency in [0, 1]
  double window_ps = 1e5;      ///< integration window
  double ionize_rate = 1e-3;   ///< ionization rate of the non-cycling spin, 1/ps
  int trials = 10000;
  uint64_t seed = 1;
};

struct ReadoutResult {
  double fidelity = 0.0;
  int threshold = 0;                ///< call spin-down when photons >= threshold
  std::vector<long> histogram_down; ///< photon-count histogram, true spin down
  std::vector<long> histogram_up;
  double mean_photons_down = 0.0;
  double mean_photons_up = 0.0;
};

/// Monte Carlo spin readout. Spin-down cycles for the whole window and
/// detected photons arrive at cycle_rate * collection; spin-up emits the same
/// way only until it ionizes (exponential time at ionize_rate). Half of the
/// trials are prepared in each spin; the photon threshold maximizing the
/// average assignment fidelity is chosen, ties resolved toward the lowest
/// threshold. Seeded runs are bit-identical.
ReadoutResult simulate_readout(const ReadoutOptions& opt);

/// Level shift (meV) from a gate voltage: dE = eta * v_gate.
double gate_shift(double v_gate, double eta_mev_per_v = -10.0);

/// Spin-selective initialization window: the Fermi level must sit strictly
/// between the Zeeman-split ground states, eps_down < E_F < eps_up.
bool check_initialization(double eps_up_mev, double eps_down_mev, double fermi_mev);

}  // namespace moireq
