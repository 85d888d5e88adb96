#include "vcqds/oracle.hpp"

#include <bit>
#include <cmath>

namespace vcqds {

namespace {
void add_term(Eigen::MatrixXcd& m, const PauliString& p, double coeff) {
    const std::uint64_t dim = 1ULL << p.n_qubits;
    const std::complex<double> cy = coeff * i_power(p.y_count());
    for (std::uint64_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(p.z_mask & b) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(b ^ p.x_mask), static_cast<Eigen::Index>(b)) += cy * sign;
    }
}
}  // namespace

Eigen::MatrixXcd to_dense_matrix(const PauliSum& op) {
    if (op.n_qubits() == 0) throw Error("cannot densify an empty sum");
    if (op.n_qubits() > DensePropagator::kMaxQubits)
        throw Error("dense matrices capped at " + std::to_string(DensePropagator::kMaxQubits) +
                    " qubits");
    const Eigen::Index dim = 1LL << op.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [p, c] : op.terms()) add_term(m, p, c);
    return m;
}

Eigen::MatrixXcd to_dense_matrix(const PauliString& p) {
    PauliSum s(p.n_qubits);
    s.add(p, 1.0);
    return to_dense_matrix(s);
}

DensePropagator::DensePropagator(const PauliSum& hamiltonian)
    : n_qubits_(hamiltonian.n_qubits()) {
    const Eigen::MatrixXcd h = to_dense_matrix(hamiltonian);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

StateVector DensePropagator::propagate(const StateVector& state, double t) const {
    if (state.n_qubits() != n_qubits_) throw DimensionMismatch("propagator dimension mismatch");
    Eigen::VectorXcd v = eigenvectors_.adjoint() * to_eigen(state);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v(i) *= std::exp(std::complex<double>(0.0, -eigenvalues_(i) * t));
    return from_eigen(eigenvectors_ * v);
}

StateVector DensePropagator::ground_state() const {
    return from_eigen(eigenvectors_.col(0));
}

Eigen::VectorXcd to_eigen(const StateVector& s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.data(), static_cast<Eigen::Index>(s.dim()));
}

StateVector from_eigen(const Eigen::VectorXcd& v) {
    const auto dim = static_cast<std::uint64_t>(v.size());
    if (dim == 0 || (dim & (dim - 1)) != 0) throw Error("vector length is not a power of two");
    StateVector s(static_cast<std::uint32_t>(std::countr_zero(dim)));
    for (std::uint64_t i = 0; i < dim; ++i) s[i] = v(static_cast<Eigen::Index>(i));
    return s;
}

}  // namespace vcqds
