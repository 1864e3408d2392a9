#include "moireq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "moireq/bands.hpp"
#include "moireq/config.hpp"
#include "moireq/constants.hpp"
#include "moireq/decoherence.hpp"
#include "moireq/geometry.hpp"
#include "moireq/output.hpp"
#include "moireq/protocol.hpp"
#include "moireq/qubit.hpp"
#include "moireq/screener.hpp"
#include "moireq/symmetry.hpp"
#include "moireq/tightbinding.hpp"
#include "moireq/version.hpp"
#include "moireq/wellsolver.hpp"

namespace moireq {

namespace {

using json = nlohmann::ordered_json;

json meta_block(const RunConfig& cfg) {
  json m;
  m["config"] = config_hash(cfg);
  m["version"] = kVersion;
  return m;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// infinity is not representable in JSON; absent channels serialize as "inf"
json json_seconds(double tau) {
  if (std::isinf(tau)) return json("inf");
  return json(tau);
}

LatticeSpec lattice_spec(const RunConfig& cfg) {
  LatticeSpec spec;
  spec.a = cfg.material.a;
  spec.kind = lattice_kind_from_string(cfg.material.lattice);
  spec.point_group =
      spec.kind == LatticeKind::Square ? PointGroup::D4 : PointGroup::D6;
  return spec;
}

MoireGeometry config_geometry(const RunConfig& cfg) {
  return make_geometry(lattice_spec(cfg), cfg.geometry.angle);
}

MoirePotential config_potential(const RunConfig& cfg, const MoireGeometry& geom) {
  return build_moire_potential(geom, cfg.material.v0, cfg.material.r0,
                               cfg.material.m_eff, cfg.solver.nx, cfg.solver.ny);
}

SolverOptions config_solver_options(const RunConfig& cfg) {
  SolverOptions opt;
  opt.tol = cfg.solver.tol;
  opt.max_iter = cfg.solver.max_iter;
  return opt;
}

std::string band_csv(const RunConfig& cfg, const BandStructure& bs) {
  std::string out = csv_comment_header(cfg);
  out += "k_index,k_label,k_x,k_y";
  for (int b = 0; b < bs.n_bands(); ++b) out += ",band_" + std::to_string(b);
  out += "\n";
  for (int i = 0; i < bs.n_points(); ++i) {
    out += std::to_string(i) + "," + bs.points[i].label + "," +
           fmt9(bs.points[i].k.x()) + "," + fmt9(bs.points[i].k.y());
    for (int b = 0; b < bs.n_bands(); ++b) out += "," + fmt9(bs.energies[b][i]);
    out += "\n";
  }
  return out;
}

int cmd_geometry(const RunConfig& cfg, const std::string& out_dir) {
  const MoireGeometry geom = config_geometry(cfg);
  std::printf("R = %.2f nm\n", geom.period);

  json j;
  j["_meta"] = meta_block(cfg);
  j["lattice"] = to_string(geom.lattice.kind);
  j["point_group"] = to_string(geom.lattice.point_group);
  j["a_nm"] = geom.lattice.a;
  j["theta_deg"] = geom.theta_deg;
  j["period_nm"] = geom.period;
  const Eigen::Matrix2d a = geom.cell_vectors();
  j["cell_nm"] = {{a(0, 0), a(1, 0)}, {a(0, 1), a(1, 1)}};
  j["cell_area_nm2"] = geom.cell_area();
  write_text_file(out_dir, "geometry.json", dump_json(j));
  return 0;
}

int cmd_bands(const RunConfig& cfg, const std::string& out_dir, bool classify) {
  const MoireGeometry geom = config_geometry(cfg);
  const MoirePotential pot = config_potential(cfg, geom);
  const SolverOptions sopt = config_solver_options(cfg);
  const BandStructure bs = compute_band_structure(
      pot, standard_kpath(geom), cfg.solver.n_bands, cfg.solver.per_segment, sopt);

  write_text_file(out_dir, "bands.csv", band_csv(cfg, bs));

  json j;
  j["_meta"] = meta_block(cfg);
  j["period_nm"] = geom.period;
  j["theta_deg"] = geom.theta_deg;
  json widths = json::array();
  for (int b = 0; b < bs.n_bands(); ++b) widths.push_back(bs.band_width(b));
  j["bandwidth_mev"] = widths;
  try {
    j["barrier_mev"] = extract_barrier(bs, cfg.solver.flat_threshold);
  } catch (const std::runtime_error&) {
    j["barrier_mev"] = nullptr;
  }
  if (classify && geom.lattice.kind == LatticeKind::Square &&
      cfg.solver.nx == cfg.solver.ny) {
    const auto states =
        solve_bloch_eigenstates(pot, Vec2::Zero(), cfg.solver.n_bands, sopt);
    json cls = json::array();
    for (const auto& st : states) {
      const StateClass c = classify_state(st, PointGroup::D4);
      json e;
      e["energy_mev"] = st.energy_mev;
      e["irrep"] = c.irrep;
      e["lz"] = c.lz ? json(*c.lz) : json(nullptr);
      e["weight"] = c.weight;
      cls.push_back(e);
    }
    j["gamma_states"] = cls;
  }
  write_text_file(out_dir, "bands_summary.json", dump_json(j));

  std::printf("period R = %.4f nm, %d bands\n", geom.period, bs.n_bands());
  for (int b = 0; b < bs.n_bands(); ++b)
    std::printf("band %d: width %.6g meV\n", b, bs.band_width(b));
  return 0;
}

TBModel config_tb_model(const RunConfig& cfg) {
  TBModel m;
  m.kind = lattice_kind_from_string(cfg.material.lattice);
  m.period = moire_period(cfg.material.a, cfg.geometry.angle, m.kind);
  m.n_orbitals = static_cast<int>(cfg.tb.onsite.size());
  m.onsite = cfg.tb.onsite;
  m.hopping = {cfg.tb.t1, cfg.tb.t2};
  m.j_coupling = {cfg.tb.j1, cfg.tb.j2};
  m.jp_coupling = {cfg.tb.jp1, cfg.tb.jp2};
  return m;
}

int cmd_tb_bands(const RunConfig& cfg, const std::string& out_dir) {
  TBModel model = config_tb_model(cfg);

  json j;
  j["_meta"] = meta_block(cfg);
  j["period_nm"] = model.period;

  bool interacting = cfg.tb.j1 != 0.0 || cfg.tb.j2 != 0.0 || cfg.tb.jp1 != 0.0 ||
                     cfg.tb.jp2 != 0.0;
  if (interacting) {
    const MeanFieldResult mf = hartree_self_consistency(
        model, cfg.tb.filling, cfg.tb.nk, cfg.tb.mix, cfg.tb.sc_tol);
    if (!mf.converged)
      throw std::runtime_error("mean-field loop did not converge after " +
                               std::to_string(mf.iterations) + " iterations");
    j["occupations"] = mf.occupations;
    j["onsite_eff_mev"] = mf.onsite_eff;
    j["iterations"] = mf.iterations;
    model.onsite = mf.onsite_eff;
  }

  MoireGeometry geom;
  geom.lattice.kind = model.kind;
  geom.lattice.point_group =
      model.kind == LatticeKind::Square ? PointGroup::D4 : PointGroup::D6;
  geom.lattice.a = cfg.material.a;
  geom.theta_deg = cfg.geometry.angle;
  geom.period = model.period;

  const BandStructure bs =
      tb_band_structure(model, standard_kpath(geom), cfg.solver.per_segment);
  write_text_file(out_dir, "tb_bands.csv", band_csv(cfg, bs));

  json widths = json::array();
  for (int b = 0; b < bs.n_bands(); ++b) widths.push_back(bs.band_width(b));
  j["bandwidth_mev"] = widths;
  write_text_file(out_dir, "tb_summary.json", dump_json(j));

  for (int b = 0; b < bs.n_bands(); ++b)
    std::printf("band %d: width %.6g meV\n", b, bs.band_width(b));
  return 0;
}

int cmd_lifetime(const RunConfig& cfg, const std::string& out_dir) {
  std::vector<RadiativeChannel> channels;
  for (size_t i = 0; i < cfg.decoherence.energies.size(); ++i)
    channels.push_back({"channel_" + std::to_string(i), cfg.decoherence.energies[i],
                        cfg.decoherence.dipoles[i], true});
  const LifetimeBudget b =
      lifetime_budget(channels, cfg.decoherence.temperature, cfg.decoherence.tau_ep);

  json j;
  j["_meta"] = meta_block(cfg);
  j["temperature_k"] = b.temperature_k;
  j["tau0_s"] = json_seconds(b.tau0_s);
  j["tau_bbr_s"] = json_seconds(b.tau_bbr_s);
  j["tau_ep_s"] = json_seconds(b.tau_ep_s);
  j["tau_eff_s"] = json_seconds(b.tau_eff_s);
  j["linewidth_hz"] = b.linewidth_hz;
  write_text_file(out_dir, "lifetime.json", dump_json(j));

  std::printf("tau_eff = %.6g s, linewidth = %.6g Hz\n", b.tau_eff_s, b.linewidth_hz);
  return 0;
}

int cmd_qubit(const RunConfig& cfg, const std::string& out_dir) {
  const QubitParams qp{cfg.qubit.omega, cfg.qubit.delta};
  const Matrix2c h = single_qubit_hamiltonian(qp);

  QuantumRegister reg = QuantumRegister::pure(Eigen::Vector2cd(0.0, 1.0));
  const int samples = 200;
  std::string csv = csv_comment_header(cfg);
  csv += "t_ps,p_e,p_g,re_coherence,im_coherence\n";
  QuantumRegister current = reg;
  for (int s = 0; s <= samples; ++s) {
    const double t = cfg.qubit.duration * s / samples;
    if (cfg.qubit.dephasing > 0.0) {
      if (s > 0) {
        Collapse dephase{Eigen::Matrix2cd(Eigen::Vector2cd(1, -1).asDiagonal()),
                         cfg.qubit.dephasing};
        current = evolve_lindblad(h, {dephase}, cfg.qubit.duration / samples,
                                  current, cfg.qubit.dt);
      }
    } else {
      current = evolve_unitary(h, t, reg);
    }
    csv += fmt9(t) + "," + fmt9(current.rho(0, 0).real()) + "," +
           fmt9(current.rho(1, 1).real()) + "," + fmt9(current.rho(0, 1).real()) +
           "," + fmt9(current.rho(0, 1).imag()) + "\n";
  }
  write_text_file(out_dir, "qubit_timeseries.csv", csv);

  json j;
  j["_meta"] = meta_block(cfg);
  j["zeeman_ground_ghz"] = zeeman_splitting_ghz(cfg.qubit.g_ground, cfg.qubit.b_field);
  j["zeeman_excited_ghz"] = zeeman_splitting_ghz(cfg.qubit.g_excited, cfg.qubit.b_field);
  j["line_split_ghz"] = zeeman_splitting_ghz(
      std::abs(cfg.qubit.g_ground - cfg.qubit.g_excited), cfg.qubit.b_field);
  if (cfg.qubit.omega != 0.0) {
    const double t_pi = M_PI / std::abs(cfg.qubit.omega);
    j["pi_time_ps"] = t_pi;
    Matrix2c target;
    target << 0, 1, 1, 0;
    j["pi_gate_fidelity"] = gate_fidelity(propagator(h, t_pi), target);
  }
  write_text_file(out_dir, "qubit_summary.json", dump_json(j));

  std::printf("zeeman: ground %.4f GHz, excited %.4f GHz\n",
              zeeman_splitting_ghz(cfg.qubit.g_ground, cfg.qubit.b_field),
              zeeman_splitting_ghz(cfg.qubit.g_excited, cfg.qubit.b_field));
  return 0;
}

int cmd_two_qubit(const RunConfig& cfg, const std::string& out_dir) {
  const QubitParams qp{cfg.qubit.omega, cfg.qubit.delta};
  PairCoupling pair;
  pair.r_nm = cfg.qubit.r;
  pair.c0 = cfg.qubit.c0;
  pair.c0p = cfg.qubit.c0p;
  pair.d_i = cfg.qubit.d_i;
  pair.d_j = cfg.qubit.d_j;
  const Matrix4c h = two_qubit_hamiltonian(qp, qp, pair);

  Eigen::Vector4cd psi0 = Eigen::Vector4cd::Zero();
  psi0(1) = 1.0;  // |eg>
  const QuantumRegister reg = QuantumRegister::pure(psi0);

  const int samples = 200;
  double max_conc = 0.0;
  std::string csv = csv_comment_header(cfg);
  csv += "t_ps,p_ee,p_eg,p_ge,p_gg,concurrence\n";
  for (int s = 0; s <= samples; ++s) {
    const double t = cfg.qubit.duration * s / samples;
    const QuantumRegister now = evolve_unitary(h, t, reg);
    const double c = concurrence(now);
    max_conc = std::max(max_conc, c);
    csv += fmt9(t);
    for (int d = 0; d < 4; ++d) csv += "," + fmt9(now.rho(d, d).real());
    csv += "," + fmt9(c) + "\n";
  }
  write_text_file(out_dir, "twoqubit_timeseries.csv", csv);

  const double j_meV = pair.flip_flop_j();
  json j;
  j["_meta"] = meta_block(cfg);
  j["j_mev"] = j_meV;
  j["charge_dipole_mev"] = pair.c0 / (pair.r_nm * pair.r_nm);
  if (j_meV != 0.0)
    j["swap_time_ps"] = M_PI * PhysConstants::hbar / (2.0 * std::abs(j_meV));
  j["max_concurrence"] = max_conc;
  write_text_file(out_dir, "twoqubit_summary.json", dump_json(j));

  std::printf("J = %.6g meV, max concurrence %.6f\n", j_meV, max_conc);
  return 0;
}

int cmd_protocol(const RunConfig& cfg, const std::string& out_dir) {
  LevelScheme scheme = LevelScheme::default_scheme();
  scheme.radiative_rate = cfg.protocol.radiative_rate;
  scheme.leak = cfg.protocol.leak;
  for (auto& l : scheme.levels)
    l.g = l.energy_mev == 0.0 ? cfg.qubit.g_ground : cfg.qubit.g_excited;

  const auto lines = level_frequencies(scheme, cfg.protocol.b_field);
  json jlines = json::array();
  double alpha_ghz = 0.0, beta_ghz = 0.0;
  for (const auto& l : lines) {
    json e;
    e["lower"] = l.lower;
    e["upper"] = l.upper;
    e["energy_mev"] = l.energy_mev;
    e["frequency_ghz"] = l.frequency_ghz;
    e["spin_conserving"] = l.spin_conserving;
    jlines.push_back(e);
    if (l.lower == "g_dn" && l.upper == "e_dn") alpha_ghz = l.frequency_ghz;
    if (l.lower == "g_up" && l.upper == "e_up") beta_ghz = l.frequency_ghz;
  }

  PumpOptions popt;
  popt.drive_lower = cfg.protocol.drive == "alpha" ? "g_dn" : "g_up";
  popt.drive_upper = cfg.protocol.drive == "alpha" ? "e_dn" : "e_up";
  popt.drive_rate = cfg.protocol.drive_rate;
  popt.duration_ps = cfg.protocol.pump_duration;
  const PumpResult pump = simulate_pumping(scheme, popt);

  std::string csv = csv_comment_header(cfg);
  csv += "t_ps";
  for (const auto& label : pump.labels) csv += ",p_" + label;
  csv += "\n";
  for (size_t i = 0; i < pump.times_ps.size(); ++i) {
    csv += fmt9(pump.times_ps[i]);
    for (size_t l = 0; l < pump.labels.size(); ++l)
      csv += "," + fmt9(pump.populations[l][i]);
    csv += "\n";
  }
  write_text_file(out_dir, "pumping.csv", csv);

  ReadoutOptions ropt;
  ropt.cycle_rate = cfg.protocol.cycle_rate;
  ropt.collection = cfg.protocol.collection;
  ropt.window_ps = cfg.protocol.window;
  ropt.ionize_rate = cfg.protocol.ionize_rate;
  ropt.trials = cfg.protocol.trials;
  ropt.seed = cfg.protocol.seed;
  const ReadoutResult readout = simulate_readout(ropt);

  const double half_zeeman =
      0.5 * cfg.qubit.g_ground * PhysConstants::muB * cfg.protocol.b_field;

  json j;
  j["_meta"] = meta_block(cfg);
  j["transitions"] = jlines;
  j["alpha_ghz"] = alpha_ghz;
  j["beta_ghz"] = beta_ghz;
  j["line_split_ghz"] = std::abs(alpha_ghz - beta_ghz);
  j["pump"] = {{"drive", cfg.protocol.drive},
               {"spin_polarization", pump.spin_polarization},
               {"charge_survival", pump.charge_survival}};
  j["readout"] = {{"fidelity", readout.fidelity},
                  {"threshold", readout.threshold},
                  {"mean_photons_down", readout.mean_photons_down},
                  {"mean_photons_up", readout.mean_photons_up},
                  {"histogram_down", readout.histogram_down},
                  {"histogram_up", readout.histogram_up}};
  j["gate_shift_mev"] = gate_shift(cfg.protocol.v_gate, cfg.protocol.eta);
  j["initialization_ok"] =
      check_initialization(half_zeeman, -half_zeeman, 0.0);
  write_text_file(out_dir, "protocol.json", dump_json(j));

  std::printf("spin polarization %.6f, readout fidelity %.6f\n",
              pump.spin_polarization, readout.fidelity);
  return 0;
}

int cmd_screen(const RunConfig& cfg, const std::string& out_dir) {
  const auto records = load_materials_csv_file(cfg.screen.input);
  ScreenCriteria crit;
  crit.gap_min_ev = cfg.screen.gap_min;
  crit.gap_max_ev = cfg.screen.gap_max;
  crit.vdw_threshold_mev_a2 = cfg.screen.vdw_threshold;
  const ScreenReport report = screen_materials(records, crit);
  const auto ranked = rank_materials(report);

  json j;
  j["_meta"] = meta_block(cfg);
  j["criteria"] = {{"gap_min_ev", crit.gap_min_ev},
                   {"gap_max_ev", crit.gap_max_ev},
                   {"vdw_threshold_mev_a2", crit.vdw_threshold_mev_a2}};
  json kept = json::array();
  for (const auto& k : ranked) {
    json e;
    e["name"] = k.record.name;
    e["a_nm"] = k.record.a_nm;
    e["band_gap_ev"] = k.record.band_gap_ev;
    e["binding_energy_mev_a2"] = k.record.binding_energy_mev_a2;
    e["van_der_waals"] = k.van_der_waals;
    e["dot_lattice"] = k.dot_lattice;
    e["point_group"] = k.point_group;
    kept.push_back(e);
  }
  j["kept"] = kept;
  json rej = json::array();
  for (const auto& r : report.rejected)
    rej.push_back({{"name", r.record.name}, {"reason", r.reason}});
  j["rejected"] = rej;
  write_text_file(out_dir, "screen_report.json", dump_json(j));

  std::string csv = csv_comment_header(cfg);
  csv += "rank,name,binding_energy_meV_A2,band_gap_eV,class,dot_lattice,point_group\n";
  for (size_t i = 0; i < ranked.size(); ++i) {
    const auto& k = ranked[i];
    csv += std::to_string(i + 1) + "," + k.record.name + "," +
           fmt9(k.record.binding_energy_mev_a2) + "," + fmt9(k.record.band_gap_ev) +
           "," + (k.van_der_waals ? "vdW" : "non-vdW") + "," + k.dot_lattice + "," +
           k.point_group + "\n";
  }
  write_text_file(out_dir, "ranked.csv", csv);

  std::printf("kept %zu, rejected %zu\n", report.kept.size(), report.rejected.size());
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& out_dir) {
  const SolverOptions sopt = config_solver_options(cfg);
  std::vector<std::pair<double, double>> r_w;
  std::string csv = csv_comment_header(cfg);
  csv += "theta_deg,period_nm,bandwidth_mev\n";
  for (double theta : cfg.sweep.angles) {
    RunConfig c = cfg;
    c.geometry.angle = theta;
    const MoireGeometry geom = config_geometry(c);
    const MoirePotential pot = config_potential(c, geom);
    const BandStructure bs =
        compute_band_structure(pot, standard_kpath(geom), 1, cfg.solver.per_segment, sopt);
    const double w = bs.band_width(0);
    r_w.emplace_back(geom.period, w);
    csv += fmt9(theta) + "," + fmt9(geom.period) + "," + fmt9(w) + "\n";
    std::printf("theta %.4g deg: R = %.6g nm, W = %.6g meV\n", theta, geom.period, w);
  }
  write_text_file(out_dir, "sweep.csv", csv);

  const HoppingFit fit = fit_hopping_decay(r_w);
  json j;
  j["_meta"] = meta_block(cfg);
  j["chi_per_nm"] = fit.chi_per_nm;
  j["log_prefactor"] = fit.log_prefactor;
  j["r_squared"] = fit.r_squared;
  write_text_file(out_dir, "sweep_fit.json", dump_json(j));

  std::printf("fit: chi = %.6g 1/nm, r^2 = %.8g\n", fit.chi_per_nm, fit.r_squared);
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"moire superlattice quantum-dot toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path, out_override, input_override, angles_override;
  std::optional<double> angle_override, a_override;
  std::optional<int> trials_override;
  std::optional<uint64_t> seed_override;
  std::string lattice_override;
  bool classify = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "configuration file");
    cmd->add_option("--out", out_override, "output directory");
  };

  auto* c_geom = app.add_subcommand("geometry", "moire period from twist angle");
  add_common(c_geom);
  c_geom->add_option("--angle", angle_override, "twist angle, degrees");
  c_geom->add_option("--a", a_override, "lattice constant, nm");
  c_geom->add_option("--lattice", lattice_override, "square or triangular");

  auto* c_bands = app.add_subcommand("bands", "continuum superlattice bands");
  add_common(c_bands);
  c_bands->add_option("--angle", angle_override, "twist angle, degrees");
  c_bands->add_flag("--classify", classify, "label zone-center states by irrep");

  auto* c_tb = app.add_subcommand("tb-bands", "tight-binding bands");
  add_common(c_tb);

  auto* c_life = app.add_subcommand("lifetime", "excited-state lifetime budget");
  add_common(c_life);

  auto* c_qubit = app.add_subcommand("qubit", "single-qubit dynamics");
  add_common(c_qubit);

  auto* c_two = app.add_subcommand("two-qubit", "coupled-pair dynamics");
  add_common(c_two);

  auto* c_proto = app.add_subcommand("protocol", "optical pumping and readout");
  add_common(c_proto);
  c_proto->add_option("--seed", seed_override, "Monte Carlo seed");
  c_proto->add_option("--trials", trials_override, "Monte Carlo trials");

  auto* c_screen = app.add_subcommand("screen", "materials screening");
  add_common(c_screen);
  c_screen->add_option("--input", input_override, "materials CSV path");

  auto* c_sweep = app.add_subcommand("sweep", "bandwidth vs twist angle");
  add_common(c_sweep);
  c_sweep->add_option("--angles", angles_override, "comma-separated angle list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    if (angle_override) cfg.geometry.angle = *angle_override;
    if (a_override) cfg.material.a = *a_override;
    if (!lattice_override.empty()) cfg.material.lattice = lattice_override;
    if (!input_override.empty()) cfg.screen.input = input_override;
    if (trials_override) cfg.protocol.trials = *trials_override;
    if (seed_override) cfg.protocol.seed = *seed_override;
    if (!angles_override.empty()) {
      cfg.sweep.angles.clear();
      std::stringstream ss(angles_override);
      std::string item;
      while (std::getline(ss, item, ','))
        cfg.sweep.angles.push_back(std::stod(item));
    }
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  const std::string out_dir = out_override.empty() ? cfg.output.dir : out_override;
  try {
    if (c_geom->parsed()) return cmd_geometry(cfg, out_dir);
    if (c_bands->parsed()) return cmd_bands(cfg, out_dir, classify);
    if (c_tb->parsed()) return cmd_tb_bands(cfg, out_dir);
    if (c_life->parsed()) return cmd_lifetime(cfg, out_dir);
    if (c_qubit->parsed()) return cmd_qubit(cfg, out_dir);
    if (c_two->parsed()) return cmd_two_qubit(cfg, out_dir);
    if (c_proto->parsed()) return cmd_protocol(cfg, out_dir);
    if (c_screen->parsed()) return cmd_screen(cfg, out_dir);
    if (c_sweep->parsed()) return cmd_sweep(cfg, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace moireq
