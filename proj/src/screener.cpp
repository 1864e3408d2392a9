#include "moireq/screener.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace moireq {

namespace {

constexpr const char* kHeader =
    "name,a_nm,layer_symmetry,band_gap_eV,binding_energy_meV_A2,source";

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(strip(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_number(const std::string& text, const std::string& field, int row) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("row " + std::to_string(row) + ": field '" + field +
                             "' is not a number: '" + text + "'");
  }
  if (pos != text.size())
    throw std::runtime_error("row " + std::to_string(row) + ": field '" + field +
                             "' has trailing characters: '" + text + "'");
  return v;
}

}  // namespace

std::vector<MaterialRecord> load_materials_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("materials table is empty");
  if (strip(line) != kHeader)
    throw std::runtime_error(std::string("bad header, expected: ") + kHeader);

  std::vector<MaterialRecord> records;
  int row = 0;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    ++row;
    const auto fields = split_csv(line);
    if (fields.size() != 6)
      throw std::runtime_error("row " + std::to_string(row) + ": expected 6 fields, got " +
                               std::to_string(fields.size()));
    MaterialRecord r;
    r.name = fields[0];
    r.a_nm = parse_number(fields[1], "a_nm", row);
    r.layer_symmetry = fields[2];
    r.band_gap_ev = parse_number(fields[3], "band_gap_eV", row);
    r.binding_energy_mev_a2 = parse_number(fields[4], "binding_energy_meV_A2", row);
    r.source = fields[5];
    if (r.name.empty())
      throw std::runtime_error("row " + std::to_string(row) + ": name must not be empty");
    if (!(r.a_nm > 0.0))
      throw std::runtime_error("row " + std::to_string(row) + ": a_nm must be positive");
    if (r.band_gap_ev < 0.0)
      throw std::runtime_error("row " + std::to_string(row) + ": band_gap_eV must be non-negative");
    if (r.binding_energy_mev_a2 < 0.0)
      throw std::runtime_error("row " + std::to_string(row) +
                               ": binding_energy_meV_A2 must be non-negative");
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<MaterialRecord> load_materials_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open materials table: " + path);
  return load_materials_csv(in);
}

ScreenReport screen_materials(const std::vector<MaterialRecord>& records,
                              const ScreenCriteria& criteria) {
  if (!(criteria.gap_max_ev > criteria.gap_min_ev))
    throw std::domain_error("gap window must be non-empty");
  ScreenReport report;
  report.criteria = criteria;
  for (const auto& r : records) {
    if (!(r.band_gap_ev > criteria.gap_min_ev)) {
      report.rejected.push_back({r, "band gap not above " +
                                        std::to_string(criteria.gap_min_ev) + " eV"});
      continue;
    }
    if (r.band_gap_ev > criteria.gap_max_ev) {
      report.rejected.push_back({r, "band gap above " +
                                        std::to_string(criteria.gap_max_ev) + " eV"});
      continue;
    }
    ScreenedMaterial s;
    s.record = r;
    s.van_der_waals = r.binding_energy_mev_a2 < criteria.vdw_threshold_mev_a2;
    if (r.layer_symmetry == "square") {
      s.dot_lattice = "square";
      s.point_group = "D4";
    } else if (r.layer_symmetry == "trigonal") {
      s.dot_lattice = "triangular";
      s.point_group = "D3";
    } else if (r.layer_symmetry == "hexagonal") {
      s.dot_lattice = "triangular";
      s.point_group = "D6";
    } else {
      s.dot_lattice = "unknown";
      s.point_group = "unknown";
    }
    report.kept.push_back(std::move(s));
  }
  return report;
}

std::vector<ScreenedMaterial> rank_materials(const ScreenReport& report) {
  std::vector<ScreenedMaterial> ranked = report.kept;
  std::sort(ranked.begin(), ranked.end(),
            [](const ScreenedMaterial& a, const ScreenedMaterial& b) {
              if (a.record.binding_energy_mev_a2 != b.record.binding_energy_mev_a2)
                return a.record.binding_energy_mev_a2 > b.record.binding_energy_mev_a2;
              return a.record.name < b.record.name;
            });
  return ranked;
}

}  // namespace moireq
