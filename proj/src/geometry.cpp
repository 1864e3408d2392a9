#include "moireq/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace moireq {

const char* to_string(LatticeKind kind) {
  return kind == LatticeKind::Square ? "square" : "triangular";
}

const char* to_string(PointGroup group) {
  switch (group) {
    case PointGroup::D4: return "D4";
    case PointGroup::D3: return "D3";
    default: return "D6";
  }
}

LatticeKind lattice_kind_from_string(const std::string& name) {
  if (name == "square") return LatticeKind::Square;
  if (name == "triangular") return LatticeKind::Triangular;
  throw std::domain_error("unknown lattice kind: " + name);
}

void LatticeSpec::validate() const {
  if (!(a > 0.0)) throw std::domain_error("lattice constant must be positive");
  if (kind == LatticeKind::Square && point_group != PointGroup::D4)
    throw std::domain_error("square lattice requires point group D4");
  if (kind == LatticeKind::Triangular && point_group == PointGroup::D4)
    throw std::domain_error("triangular lattice requires point group D3 or D6");
}

static void check_angle(double theta_deg) {
  if (!(theta_deg > 0.0) || theta_deg > 10.0)
    throw std::domain_error("twist angle must be in (0, 10] degrees");
}

double moire_period(double a, double theta_deg, LatticeKind kind) {
  if (!(a > 0.0)) throw std::domain_error("lattice constant must be positive");
  check_angle(theta_deg);
  const double half = 0.5 * theta_deg * M_PI / 180.0;
  const double denom = (kind == LatticeKind::Square) ? std::sqrt(2.0) : 2.0;
  return a / (denom * std::sin(half));
}

double twist_for_period(double a, double R, LatticeKind kind) {
  if (!(a > 0.0)) throw std::domain_error("lattice constant must be positive");
  if (!(R > 0.0)) throw std::domain_error("period must be positive");
  const double denom = (kind == LatticeKind::Square) ? std::sqrt(2.0) : 2.0;
  const double s = a / (denom * R);
  if (s >= 1.0) throw std::domain_error("period too short for this lattice constant");
  const double theta = 2.0 * std::asin(s) * 180.0 / M_PI;
  check_angle(theta);
  return theta;
}

MoireGeometry make_geometry(const LatticeSpec& lattice, double theta_deg) {
  lattice.validate();
  MoireGeometry g;
  g.lattice = lattice;
  g.theta_deg = theta_deg;
  g.period = moire_period(lattice.a, theta_deg, lattice.kind);
  return g;
}

MoireGeometry geometry_from_period(const LatticeSpec& lattice, double period) {
  lattice.validate();
  MoireGeometry g;
  g.lattice = lattice;
  g.theta_deg = twist_for_period(lattice.a, period, lattice.kind);
  g.period = period;
  return g;
}

Eigen::Matrix2d MoireGeometry::cell_vectors() const {
  Eigen::Matrix2d A;
  if (lattice.kind == LatticeKind::Square) {
    A << period, 0.0, 0.0, period;
  } else {
    A << period, 0.5 * period, 0.0, 0.5 * std::sqrt(3.0) * period;
  }
  return A;  // columns are A1, A2
}

double MoireGeometry::cell_area() const {
  return std::abs(cell_vectors().determinant());
}

std::vector<Vec2> superlattice_sites(const MoireGeometry& geom, int n) {
  if (n <= 0) throw std::domain_error("site block size must be positive");
  const Eigen::Matrix2d A = geom.cell_vectors();
  std::vector<Vec2> sites;
  sites.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sites.push_back(i * A.col(0) + j * A.col(1));
  return sites;
}

}  // namespace moireq
