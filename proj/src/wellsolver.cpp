#include "moireq/wellsolver.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "moireq/constants.hpp"
#include "moireq/rng.hpp"
#include "moireq/symmetry.hpp"

namespace moireq {

namespace {

using Complex = std::complex<double>;
using SpMat = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

constexpr Complex kI{0.0, 1.0};

}  // namespace

MoirePotential build_moire_potential(const MoireGeometry& geom, double v0,
                                     double r0, double m_eff, int nx, int ny) {
  if (v0 < 0.0) throw std::domain_error("well depth must be non-negative");
  if (!(r0 > 0.0)) throw std::domain_error("well radius must be positive");
  if (!(m_eff > 0.0)) throw std::domain_error("effective mass must be positive");
  if (nx < 32 || ny < 32) throw std::domain_error("grid must be at least 32 x 32");
  if (!(r0 < geom.period / 4.0))
    throw std::domain_error("well radius must be below a quarter of the period");

  MoirePotential pot;
  pot.geometry = geom;
  pot.v0 = v0;
  pot.r0 = r0;
  pot.m_eff = m_eff;
  pot.nx = nx;
  pot.ny = ny;
  pot.values.resize(nx, ny);

  const Eigen::Matrix2d a = geom.cell_vectors();
  const double inv_two_r0_sq = 1.0 / (2.0 * r0 * r0);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const Vec2 r = a * Vec2(static_cast<double>(i) / nx, static_cast<double>(j) / ny);
      double v = 0.0;
      for (int mi = -1; mi <= 1; ++mi)
        for (int mj = -1; mj <= 1; ++mj) {
          const Vec2 d = r - a * Vec2(mi, mj);
          v += std::exp(-d.squaredNorm() * inv_two_r0_sq);
        }
      pot.values(i, j) = -v0 * v;
    }
  }
  return pot;
}

namespace {

// Assemble H(k) = -(c_kin/m_eff) laplacian + V on the periodic grid. The
// Laplacian is written in fractional coordinates r = A u through the inverse
// metric G = A^-1 A^-T: the mixed term uses the centered four-corner stencil
// and vanishes for rectangular cells. Wrap-around links pick up Bloch phases.
SpMat assemble_hamiltonian(const MoirePotential& pot, const Vec2& k) {
  const int nx = pot.nx, ny = pot.ny;
  const int n = nx * ny;
  const Eigen::Matrix2d a = pot.geometry.cell_vectors();
  const Eigen::Matrix2d ainv = a.inverse();
  const Eigen::Matrix2d g = ainv * ainv.transpose();
  const double c = PhysConstants::c_kin / pot.m_eff;

  const double du = 1.0 / nx, dv = 1.0 / ny;
  const double cuu = c * g(0, 0) / (du * du);
  const double cvv = c * g(1, 1) / (dv * dv);
  const double cuv = c * g(0, 1) / (2.0 * du * dv);

  const Complex pu = std::exp(kI * k.dot(a.col(0)));   // crossing +u boundary
  const Complex pv = std::exp(kI * k.dot(a.col(1)));

  auto idx = [ny](int i, int j) { return i * ny + j; };

  std::vector<Triplet> trips;
  trips.reserve(static_cast<size_t>(n) * (cuv != 0.0 ? 9 : 5));
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const int row = idx(i, j);
      trips.emplace_back(row, row, Complex(2.0 * (cuu + cvv) + pot.values(i, j)));

      auto link = [&](int di, int dj, double w) {
        if (w == 0.0) return;
        int ii = i + di, jj = j + dj;
        Complex phase{1.0, 0.0};
        if (ii >= nx) { ii -= nx; phase *= pu; }
        if (ii < 0)   { ii += nx; phase *= std::conj(pu); }
        if (jj >= ny) { jj -= ny; phase *= pv; }
        if (jj < 0)   { jj += ny; phase *= std::conj(pv); }
        trips.emplace_back(row, idx(ii, jj), w * phase);
      };

      link(+1, 0, -cuu);
      link(-1, 0, -cuu);
      link(0, +1, -cvv);
      link(0, -1, -cvv);
      if (cuv != 0.0) {
        link(+1, +1, -cuv);
        link(-1, -1, -cuv);
        link(+1, -1, +cuv);
        link(-1, +1, +cuv);
      }
    }
  }
  SpMat h(n, n);
  h.setFromTriplets(trips.begin(), trips.end());
  return h;
}

struct RitzResult {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
  bool converged = false;
  double worst_residual = 0.0;
};

// Shift-invert subspace iteration: factor (H - sigma) once, iterate a block
// through the inverse and extract Ritz pairs. sigma sits below the spectrum,
// so the factorization is a genuine Cholesky and convergence is governed by
// eigenvalue ratios relative to sigma.
RitzResult subspace_iterate(const SpMat& h, double sigma, int n_states,
                            const SolverOptions& opt) {
  const int n = static_cast<int>(h.rows());
  const int m = std::min(n, n_states + opt.block_extra);

  SpMat shifted = h;
  for (int i = 0; i < n; ++i) shifted.coeffRef(i, i) -= sigma;
  shifted.makeCompressed();
  Eigen::SimplicialLLT<SpMat, Eigen::Lower> llt(shifted);
  if (llt.info() != Eigen::Success) {
    RitzResult r;
    r.worst_residual = std::numeric_limits<double>::infinity();
    return r;
  }

  SplitMix64 rng(opt.seed);
  Eigen::MatrixXcd x(n, m);
  for (int col = 0; col < m; ++col)
    for (int row = 0; row < n; ++row)
      x(row, col) = Complex(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);

  RitzResult res;
  for (int it = 0; it < opt.max_iter; ++it) {
    const Eigen::MatrixXcd y = llt.solve(x);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(y);
    const Eigen::MatrixXcd q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(n, m);

    const Eigen::MatrixXcd hq = h * q;
    Eigen::MatrixXcd t = q.adjoint() * hq;
    t = 0.5 * (t + t.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t);

    x = q * es.eigenvectors();
    const Eigen::MatrixXcd hx = hq * es.eigenvectors();

    res.values = es.eigenvalues().head(n_states);
    res.vectors = x.leftCols(n_states);
    res.worst_residual = 0.0;
    bool ok = true;
    for (int s = 0; s < n_states; ++s) {
      const double scale = std::max(1.0, std::abs(res.values(s)));
      const double r = (hx.col(s) - res.values(s) * x.col(s)).norm() / scale;
      res.worst_residual = std::max(res.worst_residual, r);
      if (r > opt.tol) ok = false;
    }
    if (ok) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace

std::vector<WellState> solve_bloch_eigenstates(const MoirePotential& pot,
                                               const Vec2& k, int n_states,
                                               const SolverOptions& opt) {
  const int n = pot.nx * pot.ny;
  if (n_states < 1) throw std::domain_error("need at least one state");
  if (n_states > n / 4)
    throw std::domain_error("n_states must not exceed a quarter of the grid size");
  if (opt.max_iter < 1 || !(opt.tol > 0.0) || opt.block_extra < 1)
    throw std::domain_error("invalid solver options");

  const SpMat h = assemble_hamiltonian(pot, k);
  const double sigma = pot.v0 > 0.0 ? -1.05 * pot.v0 - 10.0 : -1.0;

  RitzResult ritz = subspace_iterate(h, sigma, n_states, opt);
  if (!ritz.converged) {
    if (n <= opt.dense_fallback_max_dim) {
      const Eigen::MatrixXcd dense(h);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
      ritz.values = es.eigenvalues().head(n_states);
      ritz.vectors = es.eigenvectors().leftCols(n_states);
      ritz.converged = true;
    } else {
      throw SolverError(
          "Bloch eigensolver did not converge after " +
              std::to_string(opt.max_iter) + " sweeps (worst residual " +
              std::to_string(ritz.worst_residual) +
              ") and the problem exceeds the dense fallback size",
          ritz.worst_residual);
    }
  }

  std::vector<WellState> states(n_states);
  for (int s = 0; s < n_states; ++s) {
    WellState& st = states[s];
    st.energy_mev = ritz.values(s);
    st.k = k;
    st.amplitude.resize(pot.nx, pot.ny);
    const auto col = ritz.vectors.col(s);
    for (int i = 0; i < pot.nx; ++i)
      for (int j = 0; j < pot.ny; ++j) st.amplitude(i, j) = col(i * pot.ny + j);
    const double nrm = st.amplitude.norm();
    if (nrm > 0.0) st.amplitude /= nrm;
  }
  return states;
}

BandStructure compute_band_structure(const MoirePotential& pot,
                                     const std::vector<KPoint>& vertices,
                                     int n_bands, int per_segment,
                                     const SolverOptions& opt) {
  BandStructure bs;
  bs.points = sample_kpath(vertices, per_segment);
  bs.energies.assign(n_bands, {});
  bs.distances.reserve(bs.points.size());
  double dist = 0.0;
  for (size_t i = 0; i < bs.points.size(); ++i) {
    if (i > 0) dist += (bs.points[i].k - bs.points[i - 1].k).norm();
    bs.distances.push_back(dist);
    const auto states = solve_bloch_eigenstates(pot, bs.points[i].k, n_bands, opt);
    for (int b = 0; b < n_bands; ++b) bs.energies[b].push_back(states[b].energy_mev);
  }
  return bs;
}

double extract_barrier(const BandStructure& bs, double flat_threshold_mev) {
  if (!(flat_threshold_mev > 0.0))
    throw std::domain_error("flat threshold must be positive");
  int flat = -1, dispersive = -1;
  for (int b = 0; b < bs.n_bands(); ++b) {
    const bool is_flat = bs.band_width(b) < flat_threshold_mev;
    if (is_flat && flat < 0) flat = b;
    if (!is_flat && dispersive < 0) dispersive = b;
  }
  if (flat < 0) throw std::runtime_error("no flat band below the threshold");
  if (dispersive < 0) throw std::runtime_error("no dispersive band above the threshold");
  auto band_min = [&bs](int b) {
    return *std::min_element(bs.energies[b].begin(), bs.energies[b].end());
  };
  return band_min(dispersive) - band_min(flat);
}

namespace {

// D4 acting on grid indices (periodic wrap, origin at grid point (0,0)).
// Operations are listed per class: E | C4, C4^3 | C2 | Sx, Sy | Sd, Sd'.
int wrap(int v, int n) {
  v %= n;
  return v < 0 ? v + n : v;
}

using GridOp = std::pair<int, int> (*)(int, int, int);

std::pair<int, int> op_e(int i, int j, int) { return {i, j}; }
std::pair<int, int> op_c4(int i, int j, int n) { return {j, wrap(-i, n)}; }
std::pair<int, int> op_c4c(int i, int j, int n) { return {wrap(-j, n), i}; }
std::pair<int, int> op_c2(int i, int j, int n) { return {wrap(-i, n), wrap(-j, n)}; }
std::pair<int, int> op_sx(int i, int j, int n) { return {i, wrap(-j, n)}; }
std::pair<int, int> op_sy(int i, int j, int n) { return {wrap(-i, n), j}; }
std::pair<int, int> op_sd(int i, int j, int) { return {j, i}; }
std::pair<int, int> op_sdp(int i, int j, int n) { return {wrap(-j, n), wrap(-i, n)}; }

constexpr GridOp kOps[8] = {op_e, op_c4, op_c4c, op_c2, op_sx, op_sy, op_sd, op_sdp};
constexpr int kClassOf[8] = {0, 1, 1, 2, 3, 3, 4, 4};

Complex grid_overlap(const Eigen::MatrixXcd& psi, GridOp op) {
  const int n = static_cast<int>(psi.rows());
  Complex acc{0.0, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // <psi | O_g psi> with (O_g psi)(x) = psi(g^-1 x); op gives g^-1 here
      const auto [pi, pj] = op(i, j, n);
      acc += std::conj(psi(i, j)) * psi(pi, pj);
    }
  return acc;
}

}  // namespace

StateClass classify_state(const WellState& state, PointGroup group) {
  if (group != PointGroup::D4)
    throw std::invalid_argument("state classification is implemented for D4");
  if (state.amplitude.rows() != state.amplitude.cols())
    throw std::invalid_argument("classification needs a square grid");
  if (state.k.norm() > 1e-12)
    throw std::invalid_argument("classification is defined at the zone center");

  const auto& table = CharacterTable::get(PointGroup::D4);
  Complex overlaps[8];
  for (int g = 0; g < 8; ++g) overlaps[g] = grid_overlap(state.amplitude, kOps[g]);

  StateClass out;
  double best = -1.0;
  int best_irrep = -1;
  for (size_t irr = 0; irr < table.irrep_labels.size(); ++irr) {
    Complex acc{0.0, 0.0};
    for (int g = 0; g < 8; ++g) acc += table.characters[irr][kClassOf[g]] * overlaps[g];
    const double w = table.characters[irr][0] / 8.0 * acc.real();
    if (w > best) {
      best = w;
      best_irrep = static_cast<int>(irr);
    }
  }
  out.weight = best;
  if (best < 0.9) {
    out.irrep = "unclassified";
    return out;
  }
  out.irrep = table.irrep_labels[best_irrep];
  if (out.irrep == "A1" || out.irrep == "A2") {
    out.lz = 0;
  } else if (out.irrep == "B1" || out.irrep == "B2") {
    out.lz = 2;
  } else {
    // E doublet: a rotation eigenstate has <C4> = -i lz (lz = +-1); mixed
    // real combinations leave the tag unset.
    const Complex c4 = overlaps[1];
    if (std::abs(c4) > 0.5) {
      if (c4.imag() < -0.5) out.lz = 1;
      else if (c4.imag() > 0.5) out.lz = -1;
    }
  }
  return out;
}

HoppingFit fit_hopping_decay(const std::vector<std::pair<double, double>>& r_w) {
  if (r_w.size() < 3) throw std::domain_error("fit needs at least three samples");
  const double n = static_cast<double>(r_w.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [r, w] : r_w) {
    if (!(r > 0.0)) throw std::domain_error("periods must be positive");
    if (!(w > 0.0)) throw std::domain_error("bandwidths must be positive");
    sx += r;
    sy += std::log(w);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [r, w] : r_w) {
    sxx += (r - mx) * (r - mx);
    sxy += (r - mx) * (std::log(w) - my);
  }
  if (sxx == 0.0) throw std::domain_error("fit needs distinct periods");

  HoppingFit fit;
  const double slope = sxy / sxx;
  fit.chi_per_nm = -slope;
  fit.log_prefactor = my - slope * mx;

  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& [r, w] : r_w) {
    const double y = std::log(w);
    const double pred = fit.log_prefactor + slope * r;
    ss_res += (y - pred) * (y - pred);
    ss_tot += (y - my) * (y - my);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace moireq
