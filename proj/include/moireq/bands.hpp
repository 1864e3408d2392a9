#pragma once

#include <string>
#include <vector>

#include "moireq/geometry.hpp"

namespace moireq {

/// A point on a reciprocal-space path. k is Cartesian, rad/nm. label is
/// nonempty only at high-symmetry vertices.
struct KPoint {
  std::string label;
  Vec2 k = Vec2::Zero();
};

/// Band energies sampled along a k-path. energies[b][i] is band b at point i;
/// bands are sorted ascending at every point.
struct BandStructure {
  std::vector<KPoint> points;
  std::vector<double> distances;  ///< cumulative path length, rad/nm
  std::vector<std::vector<double>> energies;

  int n_bands() const { return static_cast<int>(energies.size()); }
  int n_points() const { return static_cast<int>(points.size()); }
  /// max - min of one band over the sampled path, meV.
  double band_width(int band) const;
};

/// Reciprocal cell vectors B (columns) with B^T A = 2 pi I.
Eigen::Matrix2d reciprocal_vectors(const MoireGeometry& geom);

/// High-symmetry loop of the superlattice BZ:
/// square Gamma-X-M-Gamma, triangular Gamma-M-K-Gamma.
std::vector<KPoint> standard_kpath(const MoireGeometry& geom);

/// Expand path vertices into sampled points, per_segment points per segment
/// plus the closing vertex. Vertex labels are kept on their samples.
std::vector<KPoint> sample_kpath(const std::vector<KPoint>& vertices,
                                 int per_segment);

}  // namespace moireq
