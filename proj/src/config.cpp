#include "moireq/config.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace moireq {

namespace {

using FieldRef = std::variant<double*, int*, uint64_t*, std::string*,
                              std::vector<double>*>;

struct Field {
  const char* key;
  FieldRef ref;
};

// Registry order defines the canonical serialization, so the config hash is
// stable against reordered input files.
std::vector<Field> fields(RunConfig& c) {
  return {
      {"material.a", &c.material.a},
      {"material.lattice", &c.material.lattice},
      {"material.v0", &c.material.v0},
      {"material.r0", &c.material.r0},
      {"material.m_eff", &c.material.m_eff},
      {"geometry.angle", &c.geometry.angle},
      {"solver.nx", &c.solver.nx},
      {"solver.ny", &c.solver.ny},
      {"solver.n_bands", &c.solver.n_bands},
      {"solver.per_segment", &c.solver.per_segment},
      {"solver.flat_threshold", &c.solver.flat_threshold},
      {"solver.tol", &c.solver.tol},
      {"solver.max_iter", &c.solver.max_iter},
      {"sweep.angles", &c.sweep.angles},
      {"tb.onsite", &c.tb.onsite},
      {"tb.t1", &c.tb.t1},
      {"tb.t2", &c.tb.t2},
      {"tb.j1", &c.tb.j1},
      {"tb.j2", &c.tb.j2},
      {"tb.jp1", &c.tb.jp1},
      {"tb.jp2", &c.tb.jp2},
      {"tb.filling", &c.tb.filling},
      {"tb.nk", &c.tb.nk},
      {"tb.mix", &c.tb.mix},
      {"tb.sc_tol", &c.tb.sc_tol},
      {"qubit.omega", &c.qubit.omega},
      {"qubit.delta", &c.qubit.delta},
      {"qubit.duration", &c.qubit.duration},
      {"qubit.dt", &c.qubit.dt},
      {"qubit.r", &c.qubit.r},
      {"qubit.c0", &c.qubit.c0},
      {"qubit.c0p", &c.qubit.c0p},
      {"qubit.d_i", &c.qubit.d_i},
      {"qubit.d_j", &c.qubit.d_j},
      {"qubit.g_ground", &c.qubit.g_ground},
      {"qubit.g_excited", &c.qubit.g_excited},
      {"qubit.b_field", &c.qubit.b_field},
      {"qubit.dephasing", &c.qubit.dephasing},
      {"decoherence.temperature", &c.decoherence.temperature},
      {"decoherence.energies", &c.decoherence.energies},
      {"decoherence.dipoles", &c.decoherence.dipoles},
      {"decoherence.tau_ep", &c.decoherence.tau_ep},
      {"protocol.drive", &c.protocol.drive},
      {"protocol.drive_rate", &c.protocol.drive_rate},
      {"protocol.radiative_rate", &c.protocol.radiative_rate},
      {"protocol.leak", &c.protocol.leak},
      {"protocol.pump_duration", &c.protocol.pump_duration},
      {"protocol.ionize_rate", &c.protocol.ionize_rate},
      {"protocol.cycle_rate", &c.protocol.cycle_rate},
      {"protocol.collection", &c.protocol.collection},
      {"protocol.window", &c.protocol.window},
      {"protocol.trials", &c.protocol.trials},
      {"protocol.seed", &c.protocol.seed},
      {"protocol.eta", &c.protocol.eta},
      {"protocol.v_gate", &c.protocol.v_gate},
      {"protocol.b_field", &c.protocol.b_field},
      {"screen.input", &c.screen.input},
      {"screen.gap_min", &c.screen.gap_min},
      {"screen.gap_max", &c.screen.gap_max},
      {"screen.vdw_threshold", &c.screen.vdw_threshold},
      {"output.dir", &c.output.dir},
  };
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& key) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config key " + key + ": expected a number, got '" + text + "'");
  }
  if (pos != text.size())
    throw std::runtime_error("config key " + key + ": trailing characters in '" + text + "'");
  return v;
}

void assign(const Field& f, const std::string& value) {
  const std::string key = f.key;
  if (std::holds_alternative<double*>(f.ref)) {
    *std::get<double*>(f.ref) = parse_double(value, key);
  } else if (std::holds_alternative<int*>(f.ref)) {
    const double v = parse_double(value, key);
    if (v != std::floor(v) || std::abs(v) > 2e9)
      throw std::runtime_error("config key " + key + ": expected an integer");
    *std::get<int*>(f.ref) = static_cast<int>(v);
  } else if (std::holds_alternative<uint64_t*>(f.ref)) {
    // stoull would silently wrap "-4"; insist on plain digits
    try {
      if (value.empty() ||
          value.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("digits");
      *std::get<uint64_t*>(f.ref) = std::stoull(value);
    } catch (const std::exception&) {
      throw std::runtime_error("config key " + key + ": expected an unsigned integer");
    }
  } else if (std::holds_alternative<std::string*>(f.ref)) {
    if (value.empty())
      throw std::runtime_error("config key " + key + ": value must not be empty");
    *std::get<std::string*>(f.ref) = value;
  } else {
    auto* list = std::get<std::vector<double>*>(f.ref);
    list->clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) list->push_back(parse_double(strip(item), key));
    if (list->empty())
      throw std::runtime_error("config key " + key + ": list must not be empty");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  auto reg = fields(cfg);
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected 'key = value'");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    bool found = false;
    for (auto& f : reg) {
      if (key == f.key) {
        assign(f, value);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
  RunConfig& mut = const_cast<RunConfig&>(cfg);
  std::string out;
  for (const auto& f : fields(mut)) {
    out += f.key;
    out += " = ";
    if (std::holds_alternative<double*>(f.ref)) {
      out += format_double(*std::get<double*>(f.ref));
    } else if (std::holds_alternative<int*>(f.ref)) {
      out += std::to_string(*std::get<int*>(f.ref));
    } else if (std::holds_alternative<uint64_t*>(f.ref)) {
      out += std::to_string(*std::get<uint64_t*>(f.ref));
    } else if (std::holds_alternative<std::string*>(f.ref)) {
      out += *std::get<std::string*>(f.ref);
    } else {
      const auto& list = *std::get<std::vector<double>*>(f.ref);
      for (size_t i = 0; i < list.size(); ++i) {
        if (i) out += ",";
        out += format_double(list[i]);
      }
    }
    out += "\n";
  }
  return out;
}

std::string config_hash(const RunConfig& cfg) {
  const std::string text = serialize_config(cfg);
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016" PRIx64, h);
  return buf;
}

namespace {

void require(bool ok, const std::string& field, const std::string& constraint) {
  if (!ok) throw std::runtime_error("config field " + field + ": " + constraint);
}

}  // namespace

void RunConfig::validate() const {
  require(material.a > 0.0, "material.a", "must be positive");
  require(material.lattice == "square" || material.lattice == "triangular",
          "material.lattice", "must be 'square' or 'triangular'");
  require(material.v0 >= 0.0, "material.v0", "must be non-negative");
  require(material.r0 > 0.0, "material.r0", "must be positive");
  require(material.m_eff > 0.0, "material.m_eff", "must be positive");

  require(geometry.angle > 0.0 && geometry.angle <= 10.0, "geometry.angle",
          "must be in (0, 10] degrees");

  require(solver.nx >= 32, "solver.nx", "minimum 32");
  require(solver.ny >= 32, "solver.ny", "minimum 32");
  require(solver.n_bands >= 1, "solver.n_bands", "must be at least 1");
  require(solver.per_segment >= 1, "solver.per_segment", "must be at least 1");
  require(solver.flat_threshold > 0.0, "solver.flat_threshold", "must be positive");
  require(solver.tol > 0.0, "solver.tol", "must be positive");
  require(solver.max_iter >= 1, "solver.max_iter", "must be at least 1");

  require(!sweep.angles.empty(), "sweep.angles", "must not be empty");
  for (double a : sweep.angles)
    require(a > 0.0 && a <= 10.0, "sweep.angles", "angles must be in (0, 10] degrees");

  const size_t n_orb = tb.onsite.size();
  require(n_orb >= 1, "tb.onsite", "must list at least one orbital");
  require(tb.t1.size() == n_orb, "tb.t1", "must match tb.onsite length");
  require(tb.t2.size() == n_orb, "tb.t2", "must match tb.onsite length");
  require(tb.filling >= 0.0 && tb.filling <= static_cast<double>(n_orb), "tb.filling",
          "must be in [0, n_orbitals]");
  require(tb.nk >= 1, "tb.nk", "must be at least 1");
  require(tb.mix > 0.0 && tb.mix <= 1.0, "tb.mix", "must be in (0, 1]");
  require(tb.sc_tol > 0.0, "tb.sc_tol", "must be positive");

  require(qubit.duration >= 0.0, "qubit.duration", "must be non-negative");
  require(qubit.dt > 0.0, "qubit.dt", "must be positive");
  require(qubit.r > 0.0, "qubit.r", "must be positive");
  require(qubit.b_field >= 0.0, "qubit.b_field", "must be non-negative");
  require(qubit.dephasing >= 0.0, "qubit.dephasing", "must be non-negative");

  require(decoherence.temperature >= 0.0, "decoherence.temperature",
          "must be non-negative");
  require(decoherence.energies.size() == decoherence.dipoles.size(),
          "decoherence.dipoles", "must match decoherence.energies length");
  require(!decoherence.energies.empty(), "decoherence.energies", "must not be empty");
  for (double e : decoherence.energies)
    require(e > 0.0, "decoherence.energies", "energies must be positive");
  for (double d : decoherence.dipoles)
    require(d >= 0.0, "decoherence.dipoles", "dipoles must be non-negative");
  require(decoherence.tau_ep > 0.0, "decoherence.tau_ep", "must be positive");

  require(protocol.drive == "alpha" || protocol.drive == "beta", "protocol.drive",
          "must be 'alpha' or 'beta'");
  require(protocol.drive_rate >= 0.0, "protocol.drive_rate", "must be non-negative");
  require(protocol.radiative_rate >= 0.0, "protocol.radiative_rate",
          "must be non-negative");
  require(protocol.leak >= 0.0, "protocol.leak", "must be non-negative");
  require(protocol.pump_duration > 0.0, "protocol.pump_duration", "must be positive");
  require(protocol.ionize_rate >= 0.0, "protocol.ionize_rate", "must be non-negative");
  require(protocol.cycle_rate >= 0.0, "protocol.cycle_rate", "must be non-negative");
  require(protocol.collection >= 0.0 && protocol.collection <= 1.0,
          "protocol.collection", "must be in [0, 1]");
  require(protocol.window >= 0.0, "protocol.window", "must be non-negative");
  require(protocol.trials >= 1, "protocol.trials", "must be at least 1");

  require(screen.gap_max > screen.gap_min, "screen.gap_max",
          "must exceed screen.gap_min");
  require(screen.vdw_threshold >= 0.0, "screen.vdw_threshold", "must be non-negative");
  require(!output.dir.empty(), "output.dir", "must not be empty");
}

}  // namespace moireq
