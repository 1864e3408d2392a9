#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "moireq/geometry.hpp"

using namespace moireq;

TEST_CASE("moire period matches the closed form") {
  // independent evaluation of a / (sqrt(2) sin(theta/2))
  const double a = 0.417, theta = 2.66;
  const double half_rad = 0.5 * theta * M_PI / 180.0;
  CHECK(moire_period(a, theta, LatticeKind::Square) ==
        doctest::Approx(a / (std::sqrt(2.0) * std::sin(half_rad))).epsilon(1e-15));
  CHECK(moire_period(a, theta, LatticeKind::Triangular) ==
        doctest::Approx(a / (2.0 * std::sin(half_rad))).epsilon(1e-15));
  // frozen reference value for the default material
  CHECK(moire_period(0.417, 2.66, LatticeKind::Square) ==
        doctest::Approx(12.703724056166537).epsilon(1e-13));
}

TEST_CASE("small angles give the 1/theta asymptote") {
  const double a = 0.417, theta = 0.5;
  const double approx = std::sqrt(2.0) * a / (theta * M_PI / 180.0);
  CHECK(moire_period(a, theta, LatticeKind::Square) ==
        doctest::Approx(approx).epsilon(1e-3));
}

TEST_CASE("period decreases monotonically with angle") {
  double prev = 1e300;
  for (double theta = 0.25; theta <= 10.0; theta += 0.25) {
    const double r = moire_period(0.417, theta, LatticeKind::Square);
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("twist_for_period inverts moire_period") {
  for (double theta : {0.5, 1.0, 2.66, 5.0, 7.3, 10.0}) {
    for (auto kind : {LatticeKind::Square, LatticeKind::Triangular}) {
      const double r = moire_period(0.417, theta, kind);
      CHECK(twist_for_period(0.417, r, kind) == doctest::Approx(theta).epsilon(1e-12));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(moire_period(0.0, 2.0, LatticeKind::Square), std::domain_error);
  CHECK_THROWS_AS(moire_period(-1.0, 2.0, LatticeKind::Square), std::domain_error);
  CHECK_THROWS_AS(moire_period(0.417, 0.0, LatticeKind::Square), std::domain_error);
  CHECK_THROWS_AS(moire_period(0.417, -2.0, LatticeKind::Square), std::domain_error);
  CHECK_THROWS_AS(moire_period(0.417, 10.001, LatticeKind::Square), std::domain_error);
  CHECK_NOTHROW(moire_period(0.417, 10.0, LatticeKind::Square));
  CHECK_THROWS_AS(twist_for_period(0.417, 0.0, LatticeKind::Square), std::domain_error);
  // period shorter than possible at 180 degrees
  CHECK_THROWS_AS(twist_for_period(0.417, 0.2, LatticeKind::Square), std::domain_error);
}

TEST_CASE("lattice spec consistency") {
  LatticeSpec ok;
  CHECK_NOTHROW(ok.validate());

  LatticeSpec bad_group{0.417, LatticeKind::Square, PointGroup::D3};
  CHECK_THROWS_AS(bad_group.validate(), std::domain_error);
  LatticeSpec bad_tri{0.417, LatticeKind::Triangular, PointGroup::D4};
  CHECK_THROWS_AS(bad_tri.validate(), std::domain_error);
  CHECK_NOTHROW(LatticeSpec{0.3, LatticeKind::Triangular, PointGroup::D3}.validate());
  CHECK_NOTHROW(LatticeSpec{0.3, LatticeKind::Triangular, PointGroup::D6}.validate());
  LatticeSpec bad_a{0.0, LatticeKind::Square, PointGroup::D4};
  CHECK_THROWS_AS(bad_a.validate(), std::domain_error);
}

TEST_CASE("cell vectors and area") {
  const auto sq = make_geometry({0.417, LatticeKind::Square, PointGroup::D4}, 2.66);
  const Eigen::Matrix2d a = sq.cell_vectors();
  CHECK(a.col(0).norm() == doctest::Approx(sq.period).epsilon(1e-15));
  CHECK(a.col(1).norm() == doctest::Approx(sq.period).epsilon(1e-15));
  CHECK(a.col(0).dot(a.col(1)) == doctest::Approx(0.0));
  CHECK(sq.cell_area() == doctest::Approx(sq.period * sq.period).epsilon(1e-15));

  const auto tri = make_geometry({0.417, LatticeKind::Triangular, PointGroup::D6}, 2.66);
  const Eigen::Matrix2d b = tri.cell_vectors();
  CHECK(b.col(0).norm() == doctest::Approx(tri.period).epsilon(1e-15));
  CHECK(b.col(1).norm() == doctest::Approx(tri.period).epsilon(1e-15));
  // 60 degrees between the cell vectors
  CHECK(b.col(0).dot(b.col(1)) ==
        doctest::Approx(0.5 * tri.period * tri.period).epsilon(1e-15));
  CHECK(tri.cell_area() ==
        doctest::Approx(0.5 * std::sqrt(3.0) * tri.period * tri.period).epsilon(1e-14));
}

TEST_CASE("geometry_from_period pins the period") {
  const LatticeSpec spec;
  const auto geom = geometry_from_period(spec, 12.703724056166537);
  CHECK(geom.period == doctest::Approx(12.703724056166537).epsilon(1e-15));
  CHECK(geom.theta_deg == doctest::Approx(2.66).epsilon(1e-12));
}

TEST_CASE("superlattice sites tile the cell grid") {
  const auto geom = make_geometry({0.417, LatticeKind::Square, PointGroup::D4}, 5.0);
  const auto sites = superlattice_sites(geom, 3);
  REQUIRE(sites.size() == 9);
  const Eigen::Matrix2d a = geom.cell_vectors();
  CHECK((sites[0] - Vec2(0, 0)).norm() == doctest::Approx(0.0));
  // row-major ordering: sites[i*n + j] = i A1 + j A2
  CHECK((sites[3] - Vec2(a.col(0))).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((sites[1] - Vec2(a.col(1))).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((sites[8] - Vec2(2 * a.col(0) + 2 * a.col(1))).norm() ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(superlattice_sites(geom, 0), std::domain_error);
}

TEST_CASE("nearest-neighbour site spacing equals the period") {
  for (double theta : {2.0, 4.0, 8.0}) {
    const auto geom = make_geometry({0.417, LatticeKind::Square, PointGroup::D4}, theta);
    const auto sites = superlattice_sites(geom, 2);
    CHECK((sites[2] - sites[0]).norm() == doctest::Approx(geom.period).epsilon(1e-14));
  }
}
