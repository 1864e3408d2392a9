#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace moireq {

using Vec2 = Eigen::Vector2d;

enum class LatticeKind { Square, Triangular };
enum class PointGroup { D4, D3, D6 };

const char* to_string(LatticeKind kind);
const char* to_string(PointGroup group);
LatticeKind lattice_kind_from_string(const std::string& name);

/// Monolayer lattice of the twisted homobilayer.
struct LatticeSpec {
  double a = 0.417;  ///< lattice constant, nm
  LatticeKind kind = LatticeKind::Square;
  PointGroup point_group = PointGroup::D4;

  /// Throws std::domain_error when a <= 0 or the point group does not
  /// match the lattice kind (square -> D4, triangular -> D3 or D6).
  void validate() const;
};

/// Superlattice produced by a small relative twist.
struct MoireGeometry {
  LatticeSpec lattice;
  double theta_deg = 0.0;  ///< twist angle, degrees
  double period = 0.0;     ///< moire period R, nm

  /// Supercell vectors: square (R,0),(0,R); triangular (R,0),(R/2,R*sqrt3/2).
  Eigen::Matrix2d cell_vectors() const;
  /// Area of the supercell in nm^2.
  double cell_area() const;
};

/// Moire period of a twisted homobilayer.
/// Square lattice:     R = a / (sqrt(2) sin(theta/2))
/// Triangular lattice: R = a / (2 sin(theta/2))
/// theta in degrees, restricted to (0, 10]; larger angles are outside the
/// small-twist regime this model describes.
double moire_period(double a, double theta_deg, LatticeKind kind);

/// Inverse of moire_period: the twist angle (degrees) that yields period R.
double twist_for_period(double a, double R, LatticeKind kind);

/// Geometry from a lattice and twist angle.
MoireGeometry make_geometry(const LatticeSpec& lattice, double theta_deg);

/// Geometry pinned to an explicit period; the twist angle is back-computed.
MoireGeometry geometry_from_period(const LatticeSpec& lattice, double period);

/// Dot sites of an n x n block of supercells, one site per cell at the cell
/// origin. Ordered row-major in (i, j), i.e. site = i*A1 + j*A2.
std::vector<Vec2> superlattice_sites(const MoireGeometry& geom, int n);

}  // namespace moireq
