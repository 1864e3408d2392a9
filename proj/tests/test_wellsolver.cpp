#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "moireq/bands.hpp"
#include "moireq/constants.hpp"
#include "moireq/geometry.hpp"
#include "moireq/wellsolver.hpp"

using namespace moireq;

namespace {

// reference dot array: a = 0.417 nm square lattice twisted by 2.66 degrees
MoireGeometry specimen_geometry(double theta = 2.66) {
  LatticeSpec lat;  // defaults: a = 0.417, square, D4
  return make_geometry(lat, theta);
}

MoirePotential specimen_potential(int n, double theta = 2.66) {
  return build_moire_potential(specimen_geometry(theta), 201.0, 1.0, 2.5, n, n);
}

std::complex<double> grid_c4_overlap(const Eigen::MatrixXcd& psi_a,
                                     const Eigen::MatrixXcd& psi_b) {
  const int n = static_cast<int>(psi_a.rows());
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      acc += std::conj(psi_a(i, j)) * psi_b(j, (n - i) % n);
  return acc;
}

WellState synthetic_state(int n, const std::function<std::complex<double>(double, double)>& f) {
  WellState st;
  st.amplitude.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      st.amplitude(i, j) = f(2.0 * M_PI * i / n, 2.0 * M_PI * j / n);
  st.amplitude /= st.amplitude.norm();
  return st;
}

}  // namespace

TEST_CASE("potential grid: depth, decay and periodic smoothness") {
  MoirePotential pot = specimen_potential(32);
  CHECK(pot.values(0, 0) == doctest::Approx(-201.0).epsilon(1e-12));
  // wells are isolated: the cell-center saddle is essentially zero
  CHECK(pot.values.maxCoeff() < 1e-12);
  CHECK(pot.values.minCoeff() >= -201.0 * (1.0 + 1e-12));

  // periodic images make the sampled field symmetric about the well
  CHECK(pot.values(1, 0) == doctest::Approx(pot.values(31, 0)).epsilon(1e-12));
  CHECK(pot.values(0, 5) == doctest::Approx(pot.values(0, 27)).epsilon(1e-12));
}

TEST_CASE("potential validation") {
  MoireGeometry g = specimen_geometry();
  CHECK_THROWS_AS(build_moire_potential(g, -1.0, 1.0, 2.5, 32, 32), std::domain_error);
  CHECK_THROWS_AS(build_moire_potential(g, 201.0, 0.0, 2.5, 32, 32), std::domain_error);
  CHECK_THROWS_AS(build_moire_potential(g, 201.0, 1.0, 0.0, 32, 32), std::domain_error);
  CHECK_THROWS_AS(build_moire_potential(g, 201.0, 1.0, 2.5, 16, 32), std::domain_error);
  // r0 must remain small against the period
  CHECK_THROWS_AS(build_moire_potential(g, 201.0, g.period / 3.0, 2.5, 32, 32),
                  std::domain_error);
}

TEST_CASE("free particle: solver reproduces the exact lattice dispersion") {
  MoireGeometry g = specimen_geometry();
  MoirePotential pot = build_moire_potential(g, 0.0, 1.0, 2.5, 32, 32);

  SUBCASE("zero energy at the zone center") {
    auto states = solve_bloch_eigenstates(pot, Vec2(0, 0), 1);
    CHECK(std::abs(states[0].energy_mev) < 1e-8);
  }

  SUBCASE("discrete cosine dispersion at finite k") {
    const Vec2 k(0.05, -0.03);
    auto states = solve_bloch_eigenstates(pot, k, 1);
    const double c = PhysConstants::c_kin / 2.5;
    const double h = g.period / 32.0;
    const double want = c / (h * h) *
                        (2.0 - 2.0 * std::cos(k.x() * h) + 2.0 - 2.0 * std::cos(k.y() * h));
    CHECK(states[0].energy_mev == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("zone-center spectrum against frozen references") {
  // deep-well levels: nondegenerate ground state, twofold first excited pair
  SUBCASE("32 x 32") {
    auto st = solve_bloch_eigenstates(specimen_potential(32), Vec2(0, 0), 3);
    CHECK(st[0].energy_mev == doctest::Approx(-131.938661705673).epsilon(1e-8));
    CHECK(st[1].energy_mev == doctest::Approx(-72.107812654881).epsilon(1e-8));
    CHECK(st[2].energy_mev == doctest::Approx(-72.107812654881).epsilon(1e-8));
  }

  SUBCASE("48 x 48") {
    auto st = solve_bloch_eigenstates(specimen_potential(48), Vec2(0, 0), 6);
    const double want[6] = {-131.149258861518, -70.306386654763, -70.306386654763,
                            -28.125705285131,  -20.283253662477, -19.701739034639};
    for (int s = 0; s < 6; ++s)
      CHECK(st[s].energy_mev == doctest::Approx(want[s]).epsilon(1e-8));
  }

  SUBCASE("64 x 64") {
    auto st = solve_bloch_eigenstates(specimen_potential(64), Vec2(0, 0), 6);
    const double want[6] = {-130.880275372006, -69.706398185906, -69.706398185906,
                            -27.287971818175,  -19.400828708200, -19.086746465790};
    for (int s = 0; s < 6; ++s)
      CHECK(st[s].energy_mev == doctest::Approx(want[s]).epsilon(1e-8));
  }
}

TEST_CASE("grid refinement: second-order convergence and continuum limit") {
  auto e32 = solve_bloch_eigenstates(specimen_potential(32), Vec2(0, 0), 3);
  auto e64 = solve_bloch_eigenstates(specimen_potential(64), Vec2(0, 0), 3);
  auto e128 = solve_bloch_eigenstates(specimen_potential(128), Vec2(0, 0), 3);

  CHECK(e128[0].energy_mev == doctest::Approx(-130.624224337329).epsilon(1e-8));
  CHECK(e128[1].energy_mev == doctest::Approx(-69.141222742482).epsilon(1e-8));

  // halving h divides the error by ~4: (E32-E128)/(E64-E128) ~ 5
  const double ratio = (e32[0].energy_mev - e128[0].energy_mev) /
                       (e64[0].energy_mev - e128[0].energy_mev);
  CHECK(ratio > 3.5);
  CHECK(ratio < 6.5);

  // Richardson extrapolation lands on the continuum values obtained from an
  // independent radial shooting solve of the isolated well
  const double ground_extrap =
      e128[0].energy_mev + (e128[0].energy_mev - e64[0].energy_mev) / 3.0;
  CHECK(std::abs(ground_extrap - (-130.53958)) < 5e-3);
  const double doublet_extrap =
      e128[1].energy_mev + (e128[1].energy_mev - e64[1].energy_mev) / 3.0;
  CHECK(std::abs(doublet_extrap - (-68.95561)) < 5e-3);
}

TEST_CASE("eigenstates are orthonormal and k-periodic") {
  MoirePotential pot = specimen_potential(32);
  auto st = solve_bloch_eigenstates(pot, Vec2(0, 0), 3);
  for (int s = 0; s < 3; ++s)
    CHECK(st[s].amplitude.norm() == doctest::Approx(1.0).epsilon(1e-12));
  std::complex<double> cross = (st[0].amplitude.conjugate().cwiseProduct(st[1].amplitude)).sum();
  CHECK(std::abs(cross) < 1e-7);

  // shifting k by a reciprocal vector leaves the matrix, hence the spectrum
  MoireGeometry g = pot.geometry;
  const Eigen::Matrix2d b = reciprocal_vectors(g);
  const Vec2 k(0.11, 0.04);
  auto a = solve_bloch_eigenstates(pot, k, 1);
  auto bshift = solve_bloch_eigenstates(pot, Vec2(k + b.col(0)), 1);
  CHECK(a[0].energy_mev == doctest::Approx(bshift[0].energy_mev).epsilon(1e-10));

  // real potential: time reversal gives E(-k) = E(k)
  auto c = solve_bloch_eigenstates(pot, Vec2(-k), 1);
  CHECK(a[0].energy_mev == doctest::Approx(c[0].energy_mev).epsilon(1e-10));
}

TEST_CASE("iterative result agrees with the dense fallback") {
  MoirePotential pot = specimen_potential(32);
  SolverOptions forced;
  forced.max_iter = 1;  // starve the iteration so the dense path runs
  forced.tol = 1e-13;
  auto dense = solve_bloch_eigenstates(pot, Vec2(0, 0), 2, forced);
  auto iter = solve_bloch_eigenstates(pot, Vec2(0, 0), 2);
  CHECK(dense[0].energy_mev == doctest::Approx(iter[0].energy_mev).epsilon(1e-9));
  CHECK(dense[1].energy_mev == doctest::Approx(iter[1].energy_mev).epsilon(1e-9));
}

TEST_CASE("solver failure surfaces as a typed error with a residual") {
  MoirePotential pot = specimen_potential(32);
  SolverOptions bad;
  bad.max_iter = 1;
  bad.tol = 1e-14;
  bad.dense_fallback_max_dim = 8;  // dense path unavailable
  try {
    solve_bloch_eigenstates(pot, Vec2(0, 0), 2, bad);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.worst_residual > 0.0);
  }
}

TEST_CASE("solver argument validation") {
  MoirePotential pot = specimen_potential(32);
  CHECK_THROWS_AS(solve_bloch_eigenstates(pot, Vec2(0, 0), 0), std::domain_error);
  CHECK_THROWS_AS(solve_bloch_eigenstates(pot, Vec2(0, 0), 1024), std::domain_error);
  SolverOptions bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(solve_bloch_eigenstates(pot, Vec2(0, 0), 1, bad), std::domain_error);
  bad = {};
  bad.block_extra = 0;
  CHECK_THROWS_AS(solve_bloch_eigenstates(pot, Vec2(0, 0), 1, bad), std::domain_error);
}

TEST_CASE("band structure sampling carries labels and distances") {
  MoirePotential pot = specimen_potential(32);
  BandStructure bs =
      compute_band_structure(pot, standard_kpath(pot.geometry), 1, 3);
  REQUIRE(bs.n_points() == 10);
  CHECK(bs.points.front().label == "Gamma");
  CHECK(bs.points.back().label == "Gamma");
  CHECK(std::is_sorted(bs.distances.begin(), bs.distances.end()));
  CHECK(bs.distances.front() == 0.0);
  // deep-well ground band is flat: dispersion far below the level spacing
  CHECK(bs.band_width(0) < 1.0);
}

TEST_CASE("flat-to-dispersive barrier, frozen per twist angle") {
  struct Ref {
    double theta, width0, barrier;
    int n_flat;
  };
  // 48 x 48 grid, ten bands, six samples per path segment
  const Ref refs[] = {
      {8.0, 0.301487009381, 58.600543842, 1},
      {7.0, 0.0480940669842, 98.539459810, 3},
      {5.0, 0.000149874807306, 128.176955098, 6},
  };
  double prev_width = 1e9, prev_barrier = -1e9;
  for (const Ref& ref : refs) {
    MoirePotential pot = specimen_potential(48, ref.theta);
    BandStructure bs =
        compute_band_structure(pot, standard_kpath(pot.geometry), 10, 6);
    CHECK(bs.band_width(0) == doctest::Approx(ref.width0).epsilon(1e-6));
    const double barrier = extract_barrier(bs);
    CHECK(barrier == doctest::Approx(ref.barrier).epsilon(1e-6));
    int n_flat = 0;
    for (int b = 0; b < bs.n_bands(); ++b)
      if (bs.band_width(b) < 1.0) ++n_flat;
    CHECK(n_flat == ref.n_flat);

    // smaller twist -> larger dots -> flatter bands behind a higher barrier
    CHECK(bs.band_width(0) < prev_width);
    CHECK(barrier > prev_barrier);
    prev_width = bs.band_width(0);
    prev_barrier = barrier;
  }
}

TEST_CASE("barrier extraction on synthetic bands") {
  BandStructure bs;
  bs.points.resize(3);
  bs.distances = {0.0, 1.0, 2.0};

  SUBCASE("flat then dispersive") {
    bs.energies = {{-100.0, -99.95, -100.0}, {-50.0, -30.0, -20.0}};
    CHECK(extract_barrier(bs) == doctest::Approx(50.0).epsilon(1e-12));
  }
  SUBCASE("no flat band") {
    bs.energies = {{-100.0, -50.0, -100.0}};
    CHECK_THROWS_AS(extract_barrier(bs), std::runtime_error);
  }
  SUBCASE("no dispersive band") {
    bs.energies = {{-100.0, -99.95, -100.0}};
    CHECK_THROWS_AS(extract_barrier(bs), std::runtime_error);
  }
  SUBCASE("threshold must be positive") {
    bs.energies = {{-100.0, -99.95, -100.0}, {-50.0, -30.0, -20.0}};
    CHECK_THROWS_AS(extract_barrier(bs, 0.0), std::domain_error);
  }
}

TEST_CASE("point-group labels of synthetic grid states") {
  const int n = 32;
  auto classify = [&](const std::function<std::complex<double>(double, double)>& f) {
    return classify_state(synthetic_state(n, f), PointGroup::D4);
  };

  StateClass s = classify([](double u, double v) {
    return std::complex<double>(std::cos(u) + std::cos(v), 0.0);
  });
  CHECK(s.irrep == "A1");
  CHECK(s.weight == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(s.lz.has_value());
  CHECK(*s.lz == 0);

  s = classify([](double u, double v) {
    return std::complex<double>(std::sin(u) * std::sin(v) * (std::cos(u) - std::cos(v)), 0.0);
  });
  CHECK(s.irrep == "A2");

  s = classify([](double u, double v) {
    return std::complex<double>(std::cos(u) - std::cos(v), 0.0);
  });
  CHECK(s.irrep == "B1");
  REQUIRE(s.lz.has_value());
  CHECK(*s.lz == 2);

  s = classify([](double u, double v) {
    return std::complex<double>(std::sin(u) * std::sin(v), 0.0);
  });
  CHECK(s.irrep == "B2");

  // circulating combinations pick up the angular momentum tag
  s = classify([](double u, double v) {
    return std::complex<double>(std::sin(u), std::sin(v));
  });
  CHECK(s.irrep == "E");
  REQUIRE(s.lz.has_value());
  CHECK(std::abs(*s.lz) == 1);
  StateClass conj = classify([](double u, double v) {
    return std::complex<double>(std::sin(u), -std::sin(v));
  });
  CHECK(conj.irrep == "E");
  REQUIRE(conj.lz.has_value());
  CHECK(*conj.lz == -*s.lz);

  // a real partner alone is E but carries no well-defined circulation
  s = classify([](double u, double) {
    return std::complex<double>(std::sin(u), 0.0);
  });
  CHECK(s.irrep == "E");
  CHECK_FALSE(s.lz.has_value());

  // a deliberate mixture stays unclassified
  s = classify([](double u, double v) {
    return std::complex<double>(std::cos(u) + std::cos(v) + std::sin(u) * std::sin(v), 0.0);
  });
  CHECK(s.irrep == "unclassified");
  CHECK(s.weight < 0.9);
}

TEST_CASE("classification rejects unsupported inputs") {
  WellState st = synthetic_state(32, [](double u, double v) {
    return std::complex<double>(std::cos(u) + std::cos(v), 0.0);
  });
  CHECK_THROWS_AS(classify_state(st, PointGroup::D6), std::invalid_argument);

  WellState offcenter = st;
  offcenter.k = Vec2(0.1, 0.0);
  CHECK_THROWS_AS(classify_state(offcenter, PointGroup::D4), std::invalid_argument);

  WellState rect = st;
  rect.amplitude.resize(32, 16);
  CHECK_THROWS_AS(classify_state(rect, PointGroup::D4), std::invalid_argument);
}

TEST_CASE("solved dot levels carry the expected labels") {
  auto st = solve_bloch_eigenstates(specimen_potential(48), Vec2(0, 0), 3);

  StateClass ground = classify_state(st[0], PointGroup::D4);
  CHECK(ground.irrep == "A1");
  CHECK(ground.weight > 0.99);
  REQUIRE(ground.lz.has_value());
  CHECK(*ground.lz == 0);

  // the degenerate pair spans E; any solver combination projects fully onto it
  for (int s : {1, 2}) {
    StateClass c = classify_state(st[s], PointGroup::D4);
    CHECK(c.irrep == "E");
    CHECK(c.weight > 0.99);
  }

  // rotation eigenstates within the doublet carry opposite circulation
  Eigen::Matrix2cd m;
  Eigen::MatrixXcd psi[2] = {st[1].amplitude, st[2].amplitude};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m(a, b) = grid_c4_overlap(psi[a], psi[b]);
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(m);

  std::vector<int> tags;
  for (int e = 0; e < 2; ++e) {
    WellState combo = st[1];
    combo.amplitude = es.eigenvectors()(0, e) * psi[0] + es.eigenvectors()(1, e) * psi[1];
    combo.amplitude /= combo.amplitude.norm();
    StateClass c = classify_state(combo, PointGroup::D4);
    CHECK(c.irrep == "E");
    REQUIRE(c.lz.has_value());
    tags.push_back(*c.lz);
  }
  std::sort(tags.begin(), tags.end());
  CHECK(tags == std::vector<int>{-1, 1});
}

TEST_CASE("bandwidth decay fit") {
  SUBCASE("recovers an exact exponential") {
    std::vector<std::pair<double, double>> rw;
    for (double r : {8.0, 10.5, 12.0, 14.0})
      rw.emplace_back(r, std::exp(3.2 - 0.8 * r));
    HoppingFit fit = fit_hopping_decay(rw);
    CHECK(fit.chi_per_nm == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(fit.log_prefactor == doctest::Approx(3.2).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("mild noise keeps a high r^2") {
    std::vector<std::pair<double, double>> rw = {
        {8.0, std::exp(3.2 - 0.8 * 8.0) * 1.03},
        {10.5, std::exp(3.2 - 0.8 * 10.5) * 0.98},
        {12.0, std::exp(3.2 - 0.8 * 12.0) * 1.01},
        {14.0, std::exp(3.2 - 0.8 * 14.0) * 0.99},
    };
    HoppingFit fit = fit_hopping_decay(rw);
    CHECK(fit.chi_per_nm == doctest::Approx(0.8).epsilon(0.01));
    CHECK(fit.r_squared > 0.999);
    CHECK(fit.r_squared < 1.0);
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(fit_hopping_decay({{8.0, 1.0}, {9.0, 0.5}}), std::domain_error);
    CHECK_THROWS_AS(fit_hopping_decay({{8.0, 1.0}, {9.0, 0.0}, {10.0, 0.5}}),
                    std::domain_error);
    CHECK_THROWS_AS(fit_hopping_decay({{-8.0, 1.0}, {9.0, 0.5}, {10.0, 0.2}}),
                    std::domain_error);
    CHECK_THROWS_AS(fit_hopping_decay({{8.0, 1.0}, {8.0, 0.5}, {8.0, 0.2}}),
                    std::domain_error);
  }
}
