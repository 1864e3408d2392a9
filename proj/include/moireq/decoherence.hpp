#pragma once

#include <string>
#include <vector>

namespace moireq {

/// One dipole-coupled transition out of the state under study.
/// `downward` marks transitions to lower-lying states; those contribute to
/// spontaneous emission, while both directions contribute to the
/// thermally stimulated (blackbody) rate.
struct RadiativeChannel {
  std::string partner;
  double energy_mev = 0.0;  ///< |E_partner - E_state|, must be > 0
  double dipole_enm = 0.0;  ///< transition dipole magnitude, e nm
  bool downward = true;
};

/// Einstein A coefficient of a dipole transition, in 1/s.
/// energy in meV, dipole in e nm.
double einstein_a(double energy_mev, double dipole_enm);

/// Blackbody-stimulated transition rate at temperature T (K), in 1/s:
/// sum over channels of A_i * nbar(E_i, T) with the Bose occupation nbar.
/// Exactly zero at T = 0.
double bbr_rate(const std::vector<RadiativeChannel>& channels, double temperature_k);

/// Combine one-channel lifetimes (seconds) in parallel:
/// 1/tau_eff = 1/tau0 + 1/tau_bbr + 1/tau_ep.
/// An infinite input marks an absent channel; finite inputs must be positive.
double effective_lifetime(double tau0_s, double tau_bbr_s, double tau_ep_s);

/// Lifetime-limited linewidth in Hz: 1 / (2 pi tau).
double linewidth_hz(double tau_s);

/// Boltzmann escape factor over a barrier (meV) at temperature T (K).
/// T must be > 0 and the barrier non-negative.
double tunneling_probability(double barrier_mev, double temperature_k);

/// Lifetime budget of a single excited state.
struct LifetimeBudget {
  double temperature_k = 0.0;
  double tau0_s = 0.0;      ///< spontaneous (downward channels only)
  double tau_bbr_s = 0.0;   ///< blackbody stimulated (all channels)
  double tau_ep_s = 0.0;    ///< electron-phonon, supplied by the caller
  double tau_eff_s = 0.0;
  double linewidth_hz = 0.0;
};

/// Assemble the budget from the channel list at temperature T, folding in an
/// externally supplied electron-phonon lifetime (infinity if absent).
LifetimeBudget lifetime_budget(const std::vector<RadiativeChannel>& channels,
                               double temperature_k, double tau_ep_s);

}  // namespace moireq
