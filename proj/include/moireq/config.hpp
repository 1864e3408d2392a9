#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace moireq {

/// Run configuration shared by all CLI subcommands. Files use one
/// `section.key = value` assignment per line; `#` starts a comment. Values
/// are numbers, bare strings or comma-separated number lists; `inf` is an
/// accepted number. Unknown keys and out-of-range values are rejected with
/// the offending key in the message.
struct RunConfig {
  struct Material {
    double a = 0.417;            ///< monolayer lattice constant, nm
    std::string lattice = "square";
    double v0 = 201.0;           ///< well depth, meV
    double r0 = 1.0;             ///< well radius, nm
    double m_eff = 2.5;
  } material;

  struct Geometry {
    double angle = 2.66;  ///< twist angle, degrees
  } geometry;

  struct Solver {
    int nx = 64;
    int ny = 64;
    int n_bands = 3;
    int per_segment = 8;
    double flat_threshold = 1.0;  ///< meV
    double tol = 1e-9;
    int max_iter = 200;
  } solver;

  struct Sweep {
    std::vector<double> angles = {7.0, 6.0, 5.0, 4.58};
  } sweep;

  struct TightBinding {
    std::vector<double> onsite = {0.0};
    std::vector<double> t1 = {32.5};
    std::vector<double> t2 = {0.0};
    double j1 = 0.0, j2 = 0.0;
    double jp1 = 0.0, jp2 = 0.0;
    double filling = 1.0;  ///< electrons per supercell
    int nk = 24;
    double mix = 0.5;
    double sc_tol = 1e-8;
  } tb;

  struct Qubit {
    double omega = 0.0;        ///< rad/ps
    double delta = 0.0;        ///< rad/ps
    double duration = 10.0;    ///< ps
    double dt = 1e-3;          ///< ps
    double r = 12.703;         ///< pair separation, nm
    double c0 = 1440.0;        ///< meV nm^2
    double c0p = 1000.0;       ///< meV nm^3
    double d_i = 1.0;
    double d_j = 1.0;
    double g_ground = 2.0;
    double g_excited = 1.63;
    double b_field = 1.0;      ///< T
    double dephasing = 0.0;    ///< sigma_z collapse rate, 1/ps
  } qubit;

  struct Decoherence {
    double temperature = 0.0;            ///< K
    std::vector<double> energies = {78.0};  ///< meV
    std::vector<double> dipoles = {1.0};    ///< e nm
    double tau_ep = std::numeric_limits<double>::infinity();  ///< s
  } decoherence;

  struct Protocol {
    std::string drive = "beta";
    double drive_rate = 0.1;      ///< 1/ps
    double radiative_rate = 1e-3; ///< 1/ps
    double leak = 1e-3;
    double pump_duration = 1e7;   ///< ps
    double ionize_rate = 1e-3;    ///< 1/ps
    double cycle_rate = 0.05;     ///< 1/ps
    double collection = 0.01;
    double window = 1e5;          ///< ps
    int trials = 10000;
    uint64_t seed = 1;
    double eta = -10.0;           ///< meV / V
    double v_gate = 0.0;          ///< V
    double b_field = 1.0;         ///< T
  } protocol;

  struct Screen {
    std::string input = "data/materials_sample.csv";
    double gap_min = 0.0;
    double gap_max = 5.0;
    double vdw_threshold = 25.0;
  } screen;

  struct Output {
    std::string dir = "out";
  } output;

  /// Throws std::runtime_error naming the violated field.
  void validate() const;
};

/// Parse assignments from text. Unknown keys, malformed lines and bad values
/// throw std::runtime_error with the key and line number.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Canonical serialization: every key in registry order, doubles printed
/// with %.17g so that parse(serialize(c)) reproduces c exactly.
std::string serialize_config(const RunConfig& cfg);

/// FNV-1a 64-bit hash of the canonical serialization, as "0x" + 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace moireq
