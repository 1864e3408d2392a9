#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moireq/geometry.hpp"

namespace moireq {

enum class Polarization { Z, XY };

const char* to_string(Polarization p);

/// Character table of a crystallographic point group, stored per conjugacy
/// class. Irreps and classes are addressed by label so the same interface
/// serves D4, D3 and D6.
struct CharacterTable {
  std::string group;
  std::vector<std::string> class_labels;
  std::vector<int> class_sizes;
  std::vector<std::string> irrep_labels;
  // characters[irrep][class]
  std::vector<std::vector<double>> characters;
  // irrep carried by the out-of-plane (z) and in-plane (x,y) dipole operator
  std::string dipole_z;
  std::string dipole_xy;

  int order() const;
  int irrep_index(const std::string& label) const;  // throws on unknown label
  int irrep_dim(const std::string& label) const;

  static const CharacterTable& get(PointGroup group);
};

/// Multiplicities of each irrep in the product a (x) b.
std::map<std::string, int> decompose_product(const CharacterTable& table,
                                             const std::string& a,
                                             const std::string& b);

/// Electric-dipole selection rule: the transition i -> f is allowed in the
/// given polarization when the totally symmetric irrep appears in
/// irrep_i (x) irrep_dipole (x) irrep_f.
bool dipole_allowed(const CharacterTable& table, const std::string& initial,
                    const std::string& final, Polarization pol);

struct LabeledState {
  std::string label;
  std::string irrep;
  double energy_mev = 0.0;
};

struct Transition {
  std::string from;
  std::string to;
  double energy_mev = 0.0;
  Polarization polarization = Polarization::Z;
};

/// Every dipole-allowed upward transition among the given states, one entry
/// per allowed polarization. Pairs are reported once, from the lower state to
/// the strictly higher one; equal-energy pairs are omitted.
std::vector<Transition> transition_table(const CharacterTable& table,
                                         const std::vector<LabeledState>& states);

}  // namespace moireq
