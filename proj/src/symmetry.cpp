#include "moireq/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace moireq {

const char* to_string(Polarization p) { return p == Polarization::Z ? "z" : "xy"; }

int CharacterTable::order() const {
  int n = 0;
  for (int s : class_sizes) n += s;
  return n;
}

int CharacterTable::irrep_index(const std::string& label) const {
  for (size_t i = 0; i < irrep_labels.size(); ++i)
    if (irrep_labels[i] == label) return static_cast<int>(i);
  throw std::domain_error("unknown irrep label for " + group + ": " + label);
}

int CharacterTable::irrep_dim(const std::string& label) const {
  // dimension is the character of the identity class (class 0)
  return static_cast<int>(std::lround(characters[irrep_index(label)][0]));
}

static CharacterTable make_d4() {
  CharacterTable t;
  t.group = "D4";
  t.class_labels = {"E", "2C4", "C2", "2C2'", "2C2''"};
  t.class_sizes = {1, 2, 1, 2, 2};
  t.irrep_labels = {"A1", "A2", "B1", "B2", "E"};
  t.characters = {
      {1, 1, 1, 1, 1},    // A1
      {1, 1, 1, -1, -1},  // A2
      {1, -1, 1, 1, -1},  // B1
      {1, -1, 1, -1, 1},  // B2
      {2, 0, -2, 0, 0},   // E
  };
  t.dipole_z = "A2";
  t.dipole_xy = "E";
  return t;
}

static CharacterTable make_d3() {
  CharacterTable t;
  t.group = "D3";
  t.class_labels = {"E", "2C3", "3C2"};
  t.class_sizes = {1, 2, 3};
  t.irrep_labels = {"A1", "A2", "E"};
  t.characters = {
      {1, 1, 1},
      {1, 1, -1},
      {2, -1, 0},
  };
  t.dipole_z = "A2";
  t.dipole_xy = "E";
  return t;
}

static CharacterTable make_d6() {
  CharacterTable t;
  t.group = "D6";
  t.class_labels = {"E", "2C6", "2C3", "C2", "3C2'", "3C2''"};
  t.class_sizes = {1, 2, 2, 1, 3, 3};
  t.irrep_labels = {"A1", "A2", "B1", "B2", "E1", "E2"};
  t.characters = {
      {1, 1, 1, 1, 1, 1},
      {1, 1, 1, 1, -1, -1},
      {1, -1, 1, -1, 1, -1},
      {1, -1, 1, -1, -1, 1},
      {2, 1, -1, -2, 0, 0},
      {2, -1, -1, 2, 0, 0},
  };
  t.dipole_z = "A2";
  t.dipole_xy = "E1";
  return t;
}

const CharacterTable& CharacterTable::get(PointGroup group) {
  static const CharacterTable d4 = make_d4();
  static const CharacterTable d3 = make_d3();
  static const CharacterTable d6 = make_d6();
  switch (group) {
    case PointGroup::D4: return d4;
    case PointGroup::D3: return d3;
    default: return d6;
  }
}

// Multiplicity of irrep c in the product of up to three irreps, via the
// orthogonality relation n_c = (1/|G|) sum_k |k| chi_a chi_b chi_c.
static int product_multiplicity(const CharacterTable& t, int a, int b, int c) {
  double acc = 0.0;
  for (size_t k = 0; k < t.class_sizes.size(); ++k)
    acc += t.class_sizes[k] * t.characters[a][k] * t.characters[b][k] *
           t.characters[c][k];
  return static_cast<int>(std::lround(acc / t.order()));
}

std::map<std::string, int> decompose_product(const CharacterTable& table,
                                             const std::string& a,
                                             const std::string& b) {
  const int ia = table.irrep_index(a);
  const int ib = table.irrep_index(b);
  std::map<std::string, int> out;
  for (size_t c = 0; c < table.irrep_labels.size(); ++c) {
    const int n = product_multiplicity(table, ia, ib, static_cast<int>(c));
    if (n > 0) out[table.irrep_labels[c]] = n;
  }
  return out;
}

bool dipole_allowed(const CharacterTable& table, const std::string& initial,
                    const std::string& final, Polarization pol) {
  const int ii = table.irrep_index(initial);
  const int fi = table.irrep_index(final);
  const int di = table.irrep_index(pol == Polarization::Z ? table.dipole_z
                                                          : table.dipole_xy);
  // A1 multiplicity of the triple product; real irreps, so the formula is
  // symmetric in all three factors.
  double acc = 0.0;
  for (size_t k = 0; k < table.class_sizes.size(); ++k)
    acc += table.class_sizes[k] * table.characters[ii][k] *
           table.characters[di][k] * table.characters[fi][k];
  return std::lround(acc / table.order()) > 0;
}

std::vector<Transition> transition_table(const CharacterTable& table,
                                         const std::vector<LabeledState>& states) {
  std::vector<Transition> out;
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t f = 0; f < states.size(); ++f) {
      if (i == f) continue;
      const double de = states[f].energy_mev - states[i].energy_mev;
      if (!(de > 0.0)) continue;
      for (Polarization pol : {Polarization::Z, Polarization::XY}) {
        if (dipole_allowed(table, states[i].irrep, states[f].irrep, pol))
          out.push_back({states[i].label, states[f].label, de, pol});
      }
    }
  }
  return out;
}

}  // namespace moireq
