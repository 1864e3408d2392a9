#include "moireq/tightbinding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace moireq {

void TBModel::validate() const {
  if (!(period > 0.0)) throw std::domain_error("period must be positive");
  if (n_orbitals < 1) throw std::domain_error("need at least one orbital");
  if (static_cast<int>(onsite.size()) != n_orbitals)
    throw std::domain_error("onsite size must match orbital count");
  if (hopping.size() > 2) throw std::domain_error("only two hopping shells supported");
  for (const auto& shell : hopping)
    if (static_cast<int>(shell.size()) != n_orbitals)
      throw std::domain_error("hopping shell size must match orbital count");
  if (j_coupling.size() != hopping.size() || jp_coupling.size() != hopping.size())
    throw std::domain_error("interaction shells must match hopping shells");
}

std::vector<Vec2> TBModel::shell_vectors(int shell) const {
  const double r = period;
  std::vector<Vec2> v;
  if (kind == LatticeKind::Square) {
    if (shell == 0) {
      v = {{r, 0}, {-r, 0}, {0, r}, {0, -r}};
    } else if (shell == 1) {
      v = {{r, r}, {r, -r}, {-r, r}, {-r, -r}};
    }
  } else {
    const double h = 0.5 * std::sqrt(3.0) * r;
    if (shell == 0) {
      v = {{r, 0}, {-r, 0}, {0.5 * r, h}, {0.5 * r, -h}, {-0.5 * r, h}, {-0.5 * r, -h}};
    } else if (shell == 1) {
      v = {{0, 2 * h}, {0, -2 * h}, {1.5 * r, h}, {1.5 * r, -h}, {-1.5 * r, h}, {-1.5 * r, -h}};
    }
  }
  if (v.empty()) throw std::domain_error("unsupported hopping shell index");
  return v;
}

int TBModel::coordination(int shell) const {
  return static_cast<int>(shell_vectors(shell).size());
}

double structure_factor(const TBModel& model, int shell, const Vec2& k) {
  double s = 0.0;
  for (const Vec2& d : model.shell_vectors(shell)) s += std::cos(k.dot(d));
  return s;
}

Eigen::MatrixXcd build_bloch_hamiltonian(const TBModel& model, const Vec2& k,
                                         const std::vector<double>* onsite_eff) {
  model.validate();
  const std::vector<double>& eps = onsite_eff ? *onsite_eff : model.onsite;
  if (static_cast<int>(eps.size()) != model.n_orbitals)
    throw std::domain_error("onsite size must match orbital count");
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(model.n_orbitals, model.n_orbitals);
  for (int a = 0; a < model.n_orbitals; ++a) {
    double e = eps[a];
    for (size_t s = 0; s < model.hopping.size(); ++s)
      e -= model.hopping[s][a] * structure_factor(model, static_cast<int>(s), k);
    h(a, a) = e;
  }
  return h;
}

BandStructure tb_band_structure(const TBModel& model,
                                const std::vector<KPoint>& vertices,
                                int per_segment) {
  model.validate();
  BandStructure bs;
  bs.points = sample_kpath(vertices, per_segment);
  bs.energies.assign(model.n_orbitals, {});
  bs.distances.reserve(bs.points.size());
  double dist = 0.0;
  for (size_t i = 0; i < bs.points.size(); ++i) {
    if (i > 0) dist += (bs.points[i].k - bs.points[i - 1].k).norm();
    bs.distances.push_back(dist);
    const Eigen::MatrixXcd h = build_bloch_hamiltonian(model, bs.points[i].k);
    std::vector<double> evs(model.n_orbitals);
    for (int a = 0; a < model.n_orbitals; ++a) evs[a] = h(a, a).real();
    std::sort(evs.begin(), evs.end());
    for (int a = 0; a < model.n_orbitals; ++a) bs.energies[a].push_back(evs[a]);
  }
  return bs;
}

MeanFieldResult hartree_self_consistency(const TBModel& model, double filling,
                                         int nk, double mix, double tol,
                                         int max_iter) {
  model.validate();
  if (nk < 1) throw std::domain_error("BZ grid must have at least one point");
  if (filling < 0.0 || filling > model.n_orbitals)
    throw std::domain_error("filling must be in [0, n_orbitals]");
  if (!(mix > 0.0) || mix > 1.0) throw std::domain_error("mixing must be in (0, 1]");
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");

  MoireGeometry geom;
  geom.lattice.kind = model.kind;
  geom.lattice.point_group =
      model.kind == LatticeKind::Square ? PointGroup::D4 : PointGroup::D6;
  geom.period = model.period;
  geom.theta_deg = 1.0;  // unused by the reciprocal cell
  const Eigen::Matrix2d b = reciprocal_vectors(geom);

  const int n_k = nk * nk;
  std::vector<Vec2> kpts;
  kpts.reserve(n_k);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j)
      kpts.push_back(b * Vec2(static_cast<double>(i) / nk, static_cast<double>(j) / nk));

  const long n_occupy = std::min<long>(
      std::lround(filling * n_k), static_cast<long>(n_k) * model.n_orbitals);

  MeanFieldResult res;
  res.occupations.assign(model.n_orbitals, filling / model.n_orbitals);
  res.onsite_eff = model.onsite;

  auto effective_onsite = [&](const std::vector<double>& occ) {
    std::vector<double> eps = model.onsite;
    const double n_tot = std::accumulate(occ.begin(), occ.end(), 0.0);
    for (int a = 0; a < model.n_orbitals; ++a)
      for (size_t s = 0; s < model.hopping.size(); ++s)
        eps[a] += model.coordination(static_cast<int>(s)) *
                  (model.j_coupling[s] * n_tot - model.jp_coupling[s] * occ[a]);
    return eps;
  };

  // (energy, k index, orbital) triples; the index tie-break keeps the
  // zero-temperature occupation deterministic for degenerate states.
  std::vector<std::tuple<double, int, int>> states(static_cast<size_t>(n_k) *
                                                   model.n_orbitals);
  for (int it = 1; it <= max_iter; ++it) {
    const std::vector<double> eps = effective_onsite(res.occupations);

    size_t idx = 0;
    for (int ki = 0; ki < n_k; ++ki) {
      for (int a = 0; a < model.n_orbitals; ++a) {
        double e = eps[a];
        for (size_t s = 0; s < model.hopping.size(); ++s)
          e -= model.hopping[s][a] * structure_factor(model, static_cast<int>(s), kpts[ki]);
        states[idx++] = {e, ki, a};
      }
    }
    std::sort(states.begin(), states.end());

    std::vector<double> counts(model.n_orbitals, 0.0);
    for (long s = 0; s < n_occupy; ++s) counts[std::get<2>(states[s])] += 1.0;
    for (int a = 0; a < model.n_orbitals; ++a) {
      const double target = counts[a] / n_k;
      res.occupations[a] = (1.0 - mix) * res.occupations[a] + mix * target;
    }

    const std::vector<double> eps_new = effective_onsite(res.occupations);
    double delta = 0.0;
    for (int a = 0; a < model.n_orbitals; ++a)
      delta = std::max(delta, std::abs(eps_new[a] - res.onsite_eff[a]));
    res.onsite_eff = eps_new;
    res.iterations = it;
    if (delta < tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace moireq
