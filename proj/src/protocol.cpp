#include "moireq/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "moireq/constants.hpp"
#include "moireq/rng.hpp"

namespace moireq {

const char* to_string(Spin s) { return s == Spin::Down ? "down" : "up"; }

LevelScheme LevelScheme::default_scheme() {
  LevelScheme s;
  s.point_group = PointGroup::D4;
  s.levels = {
      {"g_dn", "A2", Spin::Down, 2.0, 0.0},
      {"g_up", "A2", Spin::Up, 2.0, 0.0},
      {"e_dn", "E", Spin::Down, 1.63, 78.0},
      {"e_up", "E", Spin::Up, 1.63, 78.0},
  };
  return s;
}

int LevelScheme::index_of(const std::string& label) const {
  for (size_t i = 0; i < levels.size(); ++i)
    if (levels[i].label == label) return static_cast<int>(i);
  throw std::domain_error("unknown level label: " + label);
}

double LevelScheme::ground_energy() const {
  if (levels.empty()) throw std::domain_error("level scheme is empty");
  double e = levels.front().energy_mev;
  for (const auto& l : levels) e = std::min(e, l.energy_mev);
  return e;
}

namespace {

double zeeman_shift_mev(const Level& l, double b_tesla) {
  const double sign = l.spin == Spin::Up ? 0.5 : -0.5;
  return sign * l.g * PhysConstants::muB * b_tesla;
}

bool orbital_allowed(const LevelScheme& s, const Level& a, const Level& b) {
  const auto& table = CharacterTable::get(s.point_group);
  return dipole_allowed(table, a.irrep, b.irrep, Polarization::Z) ||
         dipole_allowed(table, a.irrep, b.irrep, Polarization::XY);
}

constexpr double kGHzPerMeV = 1e-9 / PhysConstants::h;

}  // namespace

std::vector<TransitionLine> level_frequencies(const LevelScheme& scheme,
                                              double b_tesla) {
  if (b_tesla < 0.0) throw std::domain_error("field must be non-negative");
  std::vector<TransitionLine> lines;
  const auto& lv = scheme.levels;
  for (size_t i = 0; i < lv.size(); ++i) {
    for (size_t j = 0; j < lv.size(); ++j) {
      const double ei = lv[i].energy_mev + zeeman_shift_mev(lv[i], b_tesla);
      const double ej = lv[j].energy_mev + zeeman_shift_mev(lv[j], b_tesla);
      if (!(ej > ei)) continue;
      if (!orbital_allowed(scheme, lv[i], lv[j])) continue;
      TransitionLine t;
      t.lower = lv[i].label;
      t.upper = lv[j].label;
      t.energy_mev = ej - ei;
      t.frequency_ghz = t.energy_mev * kGHzPerMeV;
      t.spin_conserving = lv[i].spin == lv[j].spin;
      lines.push_back(t);
    }
  }
  return lines;
}

PumpResult simulate_pumping(const LevelScheme& scheme, const PumpOptions& opt) {
  if (!(opt.duration_ps > 0.0)) throw std::domain_error("duration must be positive");
  if (opt.drive_rate < 0.0) throw std::domain_error("drive rate must be non-negative");
  if (opt.ionize_rate < 0.0) throw std::domain_error("ionization rate must be non-negative");
  if (scheme.leak < 0.0 || scheme.radiative_rate < 0.0)
    throw std::domain_error("rates must be non-negative");

  const int n = static_cast<int>(scheme.levels.size());
  if (n == 0) throw std::domain_error("level scheme is empty");
  const int dark = n;
  const int dim = n + 1;
  const int lo = scheme.index_of(opt.drive_lower);
  const int hi = scheme.index_of(opt.drive_upper);
  if (lo == hi) throw std::domain_error("drive endpoints must differ");

  // dp/dt = M p: column j holds all rates out of level j.
  std::vector<double> m(static_cast<size_t>(dim) * dim, 0.0);
  auto at = [&](int row, int col) -> double& { return m[static_cast<size_t>(row) * dim + col]; };
  auto add_rate = [&](int from, int to, double rate) {
    at(to, from) += rate;
    at(from, from) -= rate;
  };

  for (int u = 0; u < n; ++u) {
    for (int l = 0; l < n; ++l) {
      if (l == u) continue;
      if (!(scheme.levels[u].energy_mev > scheme.levels[l].energy_mev)) continue;
      if (!orbital_allowed(scheme, scheme.levels[l], scheme.levels[u])) continue;
      const bool conserving = scheme.levels[l].spin == scheme.levels[u].spin;
      add_rate(u, l, scheme.radiative_rate * (conserving ? 1.0 : scheme.leak));
    }
  }
  add_rate(lo, hi, opt.drive_rate);
  add_rate(hi, lo, opt.drive_rate);
  const double e0 = scheme.ground_energy();
  for (int i = 0; i < n; ++i)
    if (scheme.levels[i].energy_mev > e0) add_rate(i, dark, opt.ionize_rate);

  double max_out = 0.0;
  for (int i = 0; i < dim; ++i) max_out = std::max(max_out, -at(i, i));
  double dt = opt.dt_ps > 0.0 ? opt.dt_ps
                              : (max_out > 0.0 ? 0.2 / max_out : opt.duration_ps);
  const long steps = std::max(1L, static_cast<long>(std::ceil(opt.duration_ps / dt)));
  dt = opt.duration_ps / static_cast<double>(steps);

  std::vector<double> p(dim, 0.0);
  int n_ground = 0;
  for (int i = 0; i < n; ++i)
    if (scheme.levels[i].energy_mev == e0) ++n_ground;
  for (int i = 0; i < n; ++i)
    if (scheme.levels[i].energy_mev == e0) p[i] = 1.0 / n_ground;

  auto deriv = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (int i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (int j = 0; j < dim; ++j) acc += at(i, j) * x[j];
      out[i] = acc;
    }
  };

  PumpResult res;
  for (const auto& l : scheme.levels) res.labels.push_back(l.label);
  res.labels.push_back("dark");
  res.populations.resize(dim);

  const int samples = std::max(2, opt.samples);
  long next_sample = 0;
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  for (long s = 0; s <= steps; ++s) {
    if (s * (samples - 1) >= next_sample * steps) {
      res.times_ps.push_back(dt * static_cast<double>(s));
      for (int i = 0; i < dim; ++i) res.populations[i].push_back(p[i]);
      ++next_sample;
    }
    if (s == steps) break;
    deriv(p, k1);
    for (int i = 0; i < dim; ++i) tmp[i] = p[i] + 0.5 * dt * k1[i];
    deriv(tmp, k2);
    for (int i = 0; i < dim; ++i) tmp[i] = p[i] + 0.5 * dt * k2[i];
    deriv(tmp, k3);
    for (int i = 0; i < dim; ++i) tmp[i] = p[i] + dt * k3[i];
    deriv(tmp, k4);
    for (int i = 0; i < dim; ++i)
      p[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }

  res.spin_polarization = 0.0;
  res.charge_survival = 0.0;
  for (int i = 0; i < n; ++i) {
    res.charge_survival += p[i];
    if (scheme.levels[i].spin == Spin::Down) res.spin_polarization += p[i];
  }
  return res;
}

namespace {

// Detected photons of one trial: arrivals of a rate-r Poisson process
// inside [0, t_end], generated by summing exponential gaps.
int count_photons(SplitMix64& rng, double rate, double t_end) {
  if (!(rate > 0.0) || !(t_end > 0.0)) return 0;
  int count = 0;
  double t = rng.exponential(rate);
  while (t <= t_end) {
    ++count;
    t += rng.exponential(rate);
  }
  return count;
}

}  // namespace

ReadoutResult simulate_readout(const ReadoutOptions& opt) {
  if (opt.collection < 0.0 || opt.collection > 1.0)
    throw std::domain_error("collection efficiency must be in [0, 1]");
  if (opt.cycle_rate < 0.0) throw std::domain_error("cycle rate must be non-negative");
  if (opt.ionize_rate < 0.0) throw std::domain_error("ionization rate must be non-negative");
  if (opt.window_ps < 0.0) throw std::domain_error("window must be non-negative");
  if (opt.trials < 1) throw std::domain_error("need at least one trial");

  const double rate = opt.cycle_rate * opt.collection;
  const int n_down = opt.trials - opt.trials / 2;
  const int n_up = opt.trials / 2;

  std::vector<int> photons_down, photons_up;
  photons_down.reserve(n_down);
  photons_up.reserve(std::max(1, n_up));
  int max_count = 0;
  for (int t = 0; t < opt.trials; ++t) {
    SplitMix64 rng = stream_for(opt.seed, static_cast<uint64_t>(t));
    const bool is_down = t < n_down;
    double t_end = opt.window_ps;
    if (!is_down) {
      t_end = opt.ionize_rate > 0.0
                  ? std::min(opt.window_ps, rng.exponential(opt.ionize_rate))
                  : opt.window_ps;
    }
    const int c = count_photons(rng, rate, t_end);
    max_count = std::max(max_count, c);
    (is_down ? photons_down : photons_up).push_back(c);
  }

  ReadoutResult res;
  res.histogram_down.assign(max_count + 1, 0);
  res.histogram_up.assign(max_count + 1, 0);
  for (int c : photons_down) ++res.histogram_down[c];
  for (int c : photons_up) ++res.histogram_up[c];

  double sum_d = 0.0, sum_u = 0.0;
  for (int c : photons_down) sum_d += c;
  for (int c : photons_up) sum_u += c;
  res.mean_photons_down = n_down > 0 ? sum_d / n_down : 0.0;
  res.mean_photons_up = n_up > 0 ? sum_u / n_up : 0.0;

  // Assignment rule: call spin-down when the count is >= threshold. Scan all
  // candidate thresholds and keep the best average fidelity.
  double best_f = -1.0;
  int best_thr = 0;
  for (int thr = 0; thr <= max_count + 1; ++thr) {
    long down_ok = 0, up_ok = 0;
    for (int c : photons_down) down_ok += (c >= thr);
    for (int c : photons_up) up_ok += (c < thr);
    const double f = 0.5 * (n_down > 0 ? double(down_ok) / n_down : 1.0) +
                     0.5 * (n_up > 0 ? double(up_ok) / n_up : 1.0);
    if (f > best_f) {
      best_f = f;
      best_thr = thr;
    }
  }
  res.fidelity = best_f;
  res.threshold = best_thr;
  return res;
}

double gate_shift(double v_gate, double eta_mev_per_v) {
  return eta_mev_per_v * v_gate;
}

bool check_initialization(double eps_up_mev, double eps_down_mev, double fermi_mev) {
  return eps_down_mev < fermi_mev && fermi_mev < eps_up_mev;
}

}  // namespace moireq
