#pragma once

#include <Eigen/Dense>

#include "vcqds/pauli.hpp"
#include "vcqds/state.hpp"

namespace vcqds {

/// Dense 2^n x 2^n matrix of a Pauli sum (Hermitian for real coefficients).
Eigen::MatrixXcd to_dense_matrix(const PauliSum& op);
Eigen::MatrixXcd to_dense_matrix(const PauliString& p);

/// Exact e^{-iHt} from one eigendecomposition of the Hermitian matrix of H.
/// Serves as the all-purpose propagation oracle for small systems.
class DensePropagator {
  public:
    static constexpr std::uint32_t kMaxQubits = 10;

    explicit DensePropagator(const PauliSum& hamiltonian);

    std::uint32_t n_qubits() const { return n_qubits_; }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }

    StateVector propagate(const StateVector& state, double t) const;
    /// Ground eigenvector as a state.
    StateVector ground_state() const;

  private:
    std::uint32_t n_qubits_ = 0;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

Eigen::VectorXcd to_eigen(const StateVector& s);
StateVector from_eigen(const Eigen::VectorXcd& v);

}  // namespace vcqds
