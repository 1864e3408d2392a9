#include "moireq/bands.hpp"

#include <cmath>
#include <stdexcept>

namespace moireq {

double BandStructure::band_width(int band) const {
  if (band < 0 || band >= n_bands()) throw std::out_of_range("band index out of range");
  const auto& e = energies[band];
  if (e.empty()) throw std::runtime_error("band has no samples");
  double lo = e.front(), hi = e.front();
  for (double v : e) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

Eigen::Matrix2d reciprocal_vectors(const MoireGeometry& geom) {
  const Eigen::Matrix2d a = geom.cell_vectors();
  return 2.0 * M_PI * a.inverse().transpose();
}

std::vector<KPoint> standard_kpath(const MoireGeometry& geom) {
  const Eigen::Matrix2d b = reciprocal_vectors(geom);
  std::vector<KPoint> path;
  if (geom.lattice.kind == LatticeKind::Square) {
    path.push_back({"Gamma", Vec2::Zero()});
    path.push_back({"X", 0.5 * b.col(0)});
    path.push_back({"M", 0.5 * (b.col(0) + b.col(1))});
    path.push_back({"Gamma", Vec2::Zero()});
  } else {
    path.push_back({"Gamma", Vec2::Zero()});
    path.push_back({"M", 0.5 * b.col(0)});
    path.push_back({"K", (2.0 * b.col(0) + b.col(1)) / 3.0});
    path.push_back({"Gamma", Vec2::Zero()});
  }
  return path;
}

std::vector<KPoint> sample_kpath(const std::vector<KPoint>& vertices,
                                 int per_segment) {
  if (vertices.size() < 2) throw std::domain_error("k-path needs at least two vertices");
  if (per_segment < 1) throw std::domain_error("per_segment must be at least 1");
  std::vector<KPoint> out;
  for (size_t s = 0; s + 1 < vertices.size(); ++s) {
    const Vec2 a = vertices[s].k;
    const Vec2 b = vertices[s + 1].k;
    for (int i = 0; i < per_segment; ++i) {
      const double f = static_cast<double>(i) / per_segment;
      KPoint p;
      p.k = a + f * (b - a);
      if (i == 0) p.label = vertices[s].label;
      out.push_back(p);
    }
  }
  out.push_back(vertices.back());
  return out;
}

}  // namespace moireq
