#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moireq/bands.hpp"
#include "moireq/geometry.hpp"

namespace moireq {

/// Gaussian-well superlattice potential sampled on a periodic grid over one
/// supercell. values(i, j) is V at r = A (i/nx, j/ny) with A the cell
/// vectors; the sum includes the 3 x 3 block of periodic images so the
/// sampled potential is smooth across the cell boundary.
struct MoirePotential {
  MoireGeometry geometry;
  double v0 = 201.0;   ///< well depth, meV (potential minimum is -v0)
  double r0 = 1.0;     ///< Gaussian radius, nm
  double m_eff = 2.5;  ///< effective mass in units of m_e
  int nx = 64;
  int ny = 64;
  Eigen::MatrixXd values;
};

/// Preconditions: v0 >= 0, r0 > 0, m_eff > 0, nx, ny >= 32, and r0 < R/4 so
/// neighbouring wells overlap negligibly on the sampled cell.
MoirePotential build_moire_potential(const MoireGeometry& geom, double v0,
                                     double r0, double m_eff, int nx, int ny);

/// One Bloch eigenstate on the grid. amplitude is the periodic part, nx x ny,
/// normalized to unit l2 norm over grid points.
struct WellState {
  double energy_mev = 0.0;
  Vec2 k = Vec2::Zero();
  Eigen::MatrixXcd amplitude;
};

struct SolverOptions {
  double tol = 1e-9;        ///< Ritz residual tolerance (relative to max(1,|E|))
  int max_iter = 200;       ///< subspace iteration sweeps
  int block_extra = 5;      ///< extra vectors beyond n_states
  int dense_fallback_max_dim = 4096;
  uint64_t seed = 0x6d6f697265u;  ///< start-block seed (fixed for reproducibility)
};

/// Thrown when the iterative eigensolver fails to converge and the problem is
/// too large for the dense fallback.
struct SolverError : std::runtime_error {
  double worst_residual;
  SolverError(const std::string& msg, double residual)
      : std::runtime_error(msg), worst_residual(residual) {}
};

/// Lowest n_states eigenpairs of the Bloch Hamiltonian
///   H(k) = -(c_kin / m_eff) laplacian + V
/// discretized with second-order central differences; wrap-around links carry
/// the phases exp(+/- i k . A_j). Solved by shift-invert subspace iteration
/// with a sparse Cholesky factorization; the shift sits below -v0 so the
/// shifted operator is positive definite. Requires n_states <= nx*ny/4.
std::vector<WellState> solve_bloch_eigenstates(const MoirePotential& pot,
                                               const Vec2& k, int n_states,
                                               const SolverOptions& opt = {});

/// Bands along a vertex path (see sample_kpath) from repeated Bloch solves.
BandStructure compute_band_structure(const MoirePotential& pot,
                                     const std::vector<KPoint>& vertices,
                                     int n_bands, int per_segment,
                                     const SolverOptions& opt = {});

/// Energy from the bottom of the lowest flat band to the bottom of the first
/// dispersive band (width >= flat_threshold). Throws std::runtime_error when
/// either class is absent.
double extract_barrier(const BandStructure& bs, double flat_threshold_mev = 1.0);

struct StateClass {
  std::string irrep;  ///< D4 irrep label, or "unclassified"
  std::optional<int> lz;
  double weight = 0.0;  ///< projection weight of the reported irrep
};

/// Classify a Gamma-point state on a square grid by projecting onto D4
/// irreps with the 8 grid point-group operations. A state is labeled when the
/// dominant projection weight exceeds 0.9. For E states the +-1 angular
/// momentum tag follows from the phase of the C4 overlap (when well defined);
/// A irreps carry lz = 0 and B irreps |lz| = 2.
StateClass classify_state(const WellState& state, PointGroup group);

struct HoppingFit {
  double chi_per_nm = 0.0;    ///< decay constant of W ~ exp(-chi R)
  double log_prefactor = 0.0; ///< intercept b in ln W = b - chi R
  double r_squared = 1.0;
};

/// Least-squares fit of ln W = b - chi R to (R, bandwidth) samples.
/// Needs >= 3 samples with positive W and distinct R.
HoppingFit fit_hopping_decay(const std::vector<std::pair<double, double>>& r_w);

}  // namespace moireq
