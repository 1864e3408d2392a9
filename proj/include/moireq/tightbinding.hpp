#pragma once

#include <Eigen/Dense>
#include <vector>

#include "moireq/bands.hpp"
#include "moireq/geometry.hpp"

namespace moireq {

/// Superlattice tight-binding model with orbital-diagonal hoppings. Orbitals
/// index spin-orbitals of the dot level; because hoppings do not mix them the
/// Bloch Hamiltonian is diagonal at every k:
///   H_aa(k) = eps_eff_a - sum_s t[s][a] * S_s(k),
/// with S_s the structure factor of hopping shell s. Positive t therefore
/// puts the band minimum of a square lattice at Gamma with bandwidth 8t
/// (first shell only).
struct TBModel {
  LatticeKind kind = LatticeKind::Square;
  double period = 12.703;  ///< superlattice constant, nm
  int n_orbitals = 1;
  std::vector<double> onsite;                ///< eps_a, meV
  std::vector<std::vector<double>> hopping;  ///< hopping[s][a], meV; s = 0 is NN
  std::vector<double> j_coupling;            ///< direct interaction J_s per shell, meV
  std::vector<double> jp_coupling;           ///< exchange J'_s per shell, meV

  void validate() const;
  /// Neighbour vectors of shell s (0-based: first and second shell supported).
  std::vector<Vec2> shell_vectors(int shell) const;
  int coordination(int shell) const;
};

/// Shell structure factor S_s(k) = sum over shell vectors of exp(i k . delta).
/// Real by inversion symmetry of the shells.
double structure_factor(const TBModel& model, int shell, const Vec2& k);

/// Bloch Hamiltonian at k, optionally with mean-field corrected onsite
/// energies in place of the bare ones.
Eigen::MatrixXcd build_bloch_hamiltonian(const TBModel& model, const Vec2& k,
                                         const std::vector<double>* onsite_eff = nullptr);

/// Band energies along a sampled k-path (all n_orbitals bands, sorted).
BandStructure tb_band_structure(const TBModel& model,
                                const std::vector<KPoint>& vertices,
                                int per_segment);

struct MeanFieldResult {
  std::vector<double> occupations;  ///< <n_a> per orbital
  std::vector<double> onsite_eff;   ///< eps_eff_a, meV
  int iterations = 0;
  bool converged = false;
};

/// Self-consistent Hartree occupations at zero temperature.
/// filling is electrons per supercell. Each iteration diagonalizes on an
/// nk x nk BZ grid, fills the lowest round(filling * nk^2) states (ties
/// broken by k index then orbital index) and mixes the onsite shift:
///   eps_eff_a = eps_a + sum_s z_s (J_s * n_tot - J'_s * n_a).
/// Convergence: max |onsite_eff change| < tol.
MeanFieldResult hartree_self_consistency(const TBModel& model, double filling,
                                         int nk, double mix = 0.5,
                                         double tol = 1e-8, int max_iter = 500);

}  // namespace moireq
