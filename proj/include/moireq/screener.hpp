#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moireq {

struct MaterialRecord {
  std::string name;
  double a_nm = 0.0;
  std::string layer_symmetry;  ///< "square", "trigonal" or "hexagonal"
  double band_gap_ev = 0.0;
  double binding_energy_mev_a2 = 0.0;  ///< interlayer binding, meV / A^2
  std::string source;
};

/// Parse the materials table. Expected header (exact):
///   name,a_nm,layer_symmetry,band_gap_eV,binding_energy_meV_A2,source
/// Numeric fields must parse and satisfy a_nm > 0, band_gap_eV >= 0,
/// binding_energy_meV_A2 >= 0. Errors cite the offending data row
/// (header excluded, first data row is row 1).
std::vector<MaterialRecord> load_materials_csv(std::istream& in);
std::vector<MaterialRecord> load_materials_csv_file(const std::string& path);

struct ScreenCriteria {
  double gap_min_ev = 0.0;   ///< exclusive lower bound (metals rejected)
  double gap_max_ev = 5.0;   ///< inclusive upper bound
  double vdw_threshold_mev_a2 = 25.0;  ///< binding below this counts as vdW
};

struct ScreenedMaterial {
  MaterialRecord record;
  bool van_der_waals = false;
  std::string dot_lattice;  ///< "square", "triangular" or "unknown"
  std::string point_group;  ///< "D4", "D3", "D6" or "unknown"
};

struct RejectedMaterial {
  MaterialRecord record;
  std::string reason;
};

struct ScreenReport {
  ScreenCriteria criteria;
  std::vector<ScreenedMaterial> kept;
  std::vector<RejectedMaterial> rejected;
};

/// Keep materials with gap_min < band gap <= gap_max; classify bonding by the
/// vdW threshold and predict the dot lattice from the layer symmetry
/// (square -> square dots / D4, trigonal -> triangular / D3,
/// hexagonal -> triangular / D6).
ScreenReport screen_materials(const std::vector<MaterialRecord>& records,
                              const ScreenCriteria& criteria = {});

/// Kept materials ranked by binding energy, strongest first; ties broken
/// alphabetically by name.
std::vector<ScreenedMaterial> rank_materials(const ScreenReport& report);

}  // namespace moireq
