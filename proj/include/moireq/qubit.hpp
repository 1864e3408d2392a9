#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace moireq {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Zeeman splitting g muB B in GHz.
double zeeman_splitting_ghz(double g, double b_tesla);

/// Driven two-level parameters. Omega and Delta are angular frequencies in
/// rad/ps; they enter the Hamiltonian as hbar*Omega/2 and hbar*Delta/2 (meV).
struct QubitParams {
  double omega = 0.0;  ///< Rabi frequency, rad/ps
  double delta = 0.0;  ///< drive detuning, rad/ps
};

/// Dipole-dipole coupling of two dots a distance R apart. The complex d
/// factors carry the orientation/magnitude of each transition dipole
/// (dimensionless, default 1).
struct PairCoupling {
  double r_nm = 12.703;
  double c0 = 1440.0;    ///< charge-dipole prefactor, meV nm^2
  double c0p = 1000.0;   ///< dipole-dipole prefactor, meV nm^3
  Complex d_i{1.0, 0.0};
  Complex d_j{1.0, 0.0};

  /// Flip-flop matrix element J = (c0p / R^3) Re(d_i^* d_j), meV.
  double flip_flop_j() const;
};

/// Basis convention: index 0 is the upper state |e>, index 1 the lower |g>;
/// sigma_z = diag(+1, -1) and the raising operator |e><g| has its single
/// nonzero entry at (0, 1). Two-qubit states are ordered
/// |ee>, |eg>, |ge>, |gg> (Kronecker product, first qubit slowest).
Matrix2c single_qubit_hamiltonian(const QubitParams& p);

/// H = H1 (x) I + I (x) H2 + J (t+ t- + t- t+)
///     + (c0 / R^2) (d_i t+ (x) I - I (x) d_j t+) + h.c.
Matrix4c two_qubit_hamiltonian(const QubitParams& p1, const QubitParams& p2,
                               const PairCoupling& pair);

/// Density-matrix register for 1 or 2 qubits.
struct QuantumRegister {
  int n_qubits = 1;
  MatrixXc rho;

  static QuantumRegister pure(const VectorXc& psi);
  /// Throws std::invalid_argument unless rho is Hermitian (1e-12), unit
  /// trace (1e-9) and positive semidefinite (eigenvalues >= -1e-9).
  void validate() const;
};

/// Unitary propagator exp(-i H t / hbar) via eigendecomposition.
MatrixXc propagator(const MatrixXc& hamiltonian, double t_ps);

/// rho -> U rho U^dagger with U = exp(-i H t / hbar).
QuantumRegister evolve_unitary(const MatrixXc& hamiltonian, double t_ps,
                               const QuantumRegister& reg);

/// Collapse channel L with rate gamma (1/ps). Note that a sigma_z channel at
/// rate gamma decays off-diagonal coherences as exp(-2 gamma t).
struct Collapse {
  MatrixXc op;
  double rate = 0.0;
};

/// Fixed-step RK4 integration of the Lindblad master equation. dt_ps is the
/// step size; the last step is shortened to land on t_ps exactly. Throws
/// std::runtime_error if the trace drifts by more than 1e-5.
QuantumRegister evolve_lindblad(const MatrixXc& hamiltonian,
                                const std::vector<Collapse>& collapses,
                                double t_ps, const QuantumRegister& reg,
                                double dt_ps = 1e-3);

/// Average gate fidelity proxy |Tr(U^dagger target)|^2 / dim^2.
double gate_fidelity(const MatrixXc& u, const MatrixXc& target);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const QuantumRegister& reg);

}  // namespace moireq
