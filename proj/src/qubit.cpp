#include "moireq/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "moireq/constants.hpp"

namespace moireq {

namespace {
const Complex kI{0.0, 1.0};

Matrix2c sigma_x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2c sigma_z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2c raise() {
  Matrix2c m = Matrix2c::Zero();
  m(0, 1) = 1.0;  // |e><g|
  return m;
}

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
  MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}
}  // namespace

double zeeman_splitting_ghz(double g, double b_tesla) {
  if (b_tesla < 0.0) throw std::domain_error("field must be non-negative");
  return g * PhysConstants::muB_over_h_GHz * b_tesla;
}

double PairCoupling::flip_flop_j() const {
  if (!(r_nm > 0.0)) throw std::domain_error("separation must be positive");
  return c0p / (r_nm * r_nm * r_nm) * (std::conj(d_i) * d_j).real();
}

Matrix2c single_qubit_hamiltonian(const QubitParams& p) {
  const double hb = PhysConstants::hbar;
  return 0.5 * hb * p.omega * sigma_x() + 0.5 * hb * p.delta * sigma_z();
}

Matrix4c two_qubit_hamiltonian(const QubitParams& p1, const QubitParams& p2,
                               const PairCoupling& pair) {
  if (!(pair.r_nm > 0.0)) throw std::domain_error("separation must be positive");
  const Matrix2c id = Matrix2c::Identity();
  const Matrix2c tp = raise();
  const Matrix2c tm = tp.adjoint();

  Matrix4c h = kron(single_qubit_hamiltonian(p1), id) +
               kron(id, single_qubit_hamiltonian(p2));

  const double j = pair.flip_flop_j();
  h += j * (kron(tp, tm) + kron(tm, tp));

  const double c = pair.c0 / (pair.r_nm * pair.r_nm);
  const Matrix4c mixed = c * (pair.d_i * kron(tp, id) - pair.d_j * kron(id, tp));
  h += mixed + mixed.adjoint();
  return h;
}

QuantumRegister QuantumRegister::pure(const VectorXc& psi) {
  const Eigen::Index dim = psi.size();
  if (dim != 2 && dim != 4)
    throw std::invalid_argument("state vector must have dimension 2 or 4");
  const double norm = psi.norm();
  if (norm <= 0.0) throw std::invalid_argument("state vector must be nonzero");
  QuantumRegister reg;
  reg.n_qubits = dim == 2 ? 1 : 2;
  const VectorXc unit = psi / norm;
  reg.rho = unit * unit.adjoint();
  return reg;
}

void QuantumRegister::validate() const {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("density matrix size does not match qubit count");
  if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
    throw std::invalid_argument("density matrix must have unit trace");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("density matrix must be Hermitian");
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("density matrix must be positive semidefinite");
}

MatrixXc propagator(const MatrixXc& hamiltonian, double t_ps) {
  if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("Hamiltonian must be Hermitian");
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(hamiltonian);
  const Eigen::VectorXd ev = es.eigenvalues();
  VectorXc phases(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    phases(i) = std::exp(-kI * ev(i) * t_ps / PhysConstants::hbar);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

QuantumRegister evolve_unitary(const MatrixXc& hamiltonian, double t_ps,
                               const QuantumRegister& reg) {
  const MatrixXc u = propagator(hamiltonian, t_ps);
  QuantumRegister out = reg;
  out.rho = u * reg.rho * u.adjoint();
  return out;
}

namespace {
MatrixXc lindblad_rhs(const MatrixXc& h, const std::vector<Collapse>& collapses,
                      const MatrixXc& rho) {
  MatrixXc d = -kI / PhysConstants::hbar * (h * rho - rho * h);
  for (const auto& c : collapses) {
    const MatrixXc lr = c.op * rho;
    const MatrixXc ll = c.op.adjoint() * c.op;
    d += c.rate * (lr * c.op.adjoint() - 0.5 * (ll * rho + rho * ll));
  }
  return d;
}
}  // namespace

QuantumRegister evolve_lindblad(const MatrixXc& hamiltonian,
                                const std::vector<Collapse>& collapses,
                                double t_ps, const QuantumRegister& reg,
                                double dt_ps) {
  if (t_ps < 0.0) throw std::domain_error("evolution time must be non-negative");
  if (!(dt_ps > 0.0)) throw std::domain_error("step size must be positive");
  for (const auto& c : collapses)
    if (c.rate < 0.0) throw std::domain_error("collapse rates must be non-negative");

  MatrixXc rho = reg.rho;
  double t = 0.0;
  while (t < t_ps) {
    const double dt = std::min(dt_ps, t_ps - t);
    const MatrixXc k1 = lindblad_rhs(hamiltonian, collapses, rho);
    const MatrixXc k2 = lindblad_rhs(hamiltonian, collapses, rho + 0.5 * dt * k1);
    const MatrixXc k3 = lindblad_rhs(hamiltonian, collapses, rho + 0.5 * dt * k2);
    const MatrixXc k4 = lindblad_rhs(hamiltonian, collapses, rho + dt * k3);
    rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += dt;
    if (std::abs(rho.trace().real() - 1.0) > 1e-5)
      throw std::runtime_error(
          "Lindblad trace drifted beyond 1e-5; reduce the step size");
  }
  QuantumRegister out = reg;
  out.rho = std::move(rho);
  return out;
}

double gate_fidelity(const MatrixXc& u, const MatrixXc& target) {
  if (u.rows() != target.rows() || u.cols() != target.cols())
    throw std::invalid_argument("gate dimensions must match");
  const double dim = static_cast<double>(u.rows());
  return std::norm((u.adjoint() * target).trace()) / (dim * dim);
}

double concurrence(const QuantumRegister& reg) {
  if (reg.n_qubits != 2 || reg.rho.rows() != 4)
    throw std::invalid_argument("concurrence is defined for two qubits");
  Matrix2c sy;
  sy << 0, -kI, kI, 0;
  const MatrixXc yy = kron(sy, sy);
  const MatrixXc rho_tilde = yy * reg.rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<MatrixXc> es(reg.rho * rho_tilde);

  std::vector<double> lams(4);
  for (int i = 0; i < 4; ++i)
    lams[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lams.begin(), lams.end(), std::greater<>());
  return std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
}

}  // namespace moireq
