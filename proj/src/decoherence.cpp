#include "moireq/decoherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "moireq/constants.hpp"

namespace moireq {

// The Einstein A coefficient is evaluated in SI and returned in 1/s; these
// constants appear nowhere else in the library.
namespace {
constexpr double kElementaryChargeC = 1.602176634e-19;
constexpr double kHbarSI = 1.054571817e-34;   // J s
constexpr double kEps0 = 8.8541878128e-12;    // F / m
constexpr double kSpeedOfLight = 2.99792458e8;  // m / s
}  // namespace

double einstein_a(double energy_mev, double dipole_enm) {
  if (!(energy_mev > 0.0)) throw std::domain_error("transition energy must be positive");
  if (dipole_enm < 0.0) throw std::domain_error("dipole magnitude must be non-negative");
  const double omega = energy_mev * 1e-3 * kElementaryChargeC / kHbarSI;  // rad/s
  const double d = dipole_enm * kElementaryChargeC * 1e-9;                // C m
  return omega * omega * omega * d * d /
         (3.0 * M_PI * kEps0 * kHbarSI * kSpeedOfLight * kSpeedOfLight * kSpeedOfLight);
}

double bbr_rate(const std::vector<RadiativeChannel>& channels, double temperature_k) {
  if (temperature_k < 0.0) throw std::domain_error("temperature must be non-negative");
  if (temperature_k == 0.0) return 0.0;
  double rate = 0.0;
  for (const auto& ch : channels) {
    const double a = einstein_a(ch.energy_mev, ch.dipole_enm);
    const double x = ch.energy_mev / (PhysConstants::kB * temperature_k);
    rate += a / std::expm1(x);
  }
  return rate;
}

double effective_lifetime(double tau0_s, double tau_bbr_s, double tau_ep_s) {
  double rate = 0.0;
  for (double tau : {tau0_s, tau_bbr_s, tau_ep_s}) {
    if (std::isinf(tau)) continue;  // absent channel
    if (!(tau > 0.0)) throw std::domain_error("lifetimes must be positive");
    rate += 1.0 / tau;
  }
  if (rate == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / rate;
}

double linewidth_hz(double tau_s) {
  if (!(tau_s > 0.0)) throw std::domain_error("lifetime must be positive");
  if (std::isinf(tau_s)) return 0.0;
  return 1.0 / (2.0 * M_PI * tau_s);
}

double tunneling_probability(double barrier_mev, double temperature_k) {
  if (barrier_mev < 0.0) throw std::domain_error("barrier must be non-negative");
  if (!(temperature_k > 0.0)) throw std::domain_error("temperature must be positive");
  return std::exp(-barrier_mev / (PhysConstants::kB * temperature_k));
}

LifetimeBudget lifetime_budget(const std::vector<RadiativeChannel>& channels,
                               double temperature_k, double tau_ep_s) {
  constexpr double inf = std::numeric_limits<double>::infinity();

  double a_total = 0.0;
  for (const auto& ch : channels)
    if (ch.downward) a_total += einstein_a(ch.energy_mev, ch.dipole_enm);

  LifetimeBudget b;
  b.temperature_k = temperature_k;
  b.tau0_s = a_total > 0.0 ? 1.0 / a_total : inf;
  const double bbr = bbr_rate(channels, temperature_k);
  b.tau_bbr_s = bbr > 0.0 ? 1.0 / bbr : inf;
  b.tau_ep_s = tau_ep_s;
  b.tau_eff_s = effective_lifetime(b.tau0_s, b.tau_bbr_s, b.tau_ep_s);
  b.linewidth_hz = std::isinf(b.tau_eff_s) ? 0.0 : linewidth_hz(b.tau_eff_s);
  return b;
}

}  // namespace moireq
