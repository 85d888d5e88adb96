#include "vcqds/state.hpp"

#include <cmath>

namespace vcqds {

StateVector::StateVector(std::uint32_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits)
        throw Error("state vector supports 1.." + std::to_string(kMaxQubits) +
                    " qubits, got " + std::to_string(n_qubits));
    amps_.assign(1ULL << n_qubits, {0.0, 0.0});
}

StateVector StateVector::zero_state(std::uint32_t n_qubits) {
    return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(std::uint32_t n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) throw Error("basis index out of range");
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_bitstring(std::string_view bits) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            index |= 1ULL << i;
        else if (bits[i] != '0')
            throw Error(std::string("invalid bit character '") + bits[i] + "'");
    }
    return basis_state(static_cast<std::uint32_t>(bits.size()), index);
}

double StateVector::norm() const {
    return std::sqrt(kernels::inner(amps_.data(), amps_.data(), amps_.size()).real());
}

void StateVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw Error("cannot normalize the zero vector");
    for (auto& a : amps_) a /= n;
}

namespace {
void require_dim(const StateVector& s, std::uint32_t n) {
    if (s.n_qubits() != n)
        throw DimensionMismatch("state on " + std::to_string(s.n_qubits()) +
                                " qubits, operator on " + std::to_string(n));
}
}  // namespace

void apply_pauli_rotation(StateVector& state, const PauliString& p, double theta) {
    require_dim(state, p.n_qubits);
    kernels::rotation(state.data(), state.n_qubits(), kernels::PauliMask::of(p), theta);
}

StateVector pauli_rotated(const StateVector& state, const PauliString& p, double theta) {
    StateVector out = state;
    apply_pauli_rotation(out, p, theta);
    return out;
}

void accumulate_pauli(const StateVector& state, const PauliString& p,
                      std::complex<double> coeff, StateVector& accumulator) {
    require_dim(state, p.n_qubits);
    require_dim(accumulator, p.n_qubits);
    kernels::accumulate_pauli(state.data(), accumulator.data(), state.n_qubits(),
                              kernels::PauliMask::of(p), coeff);
}

StateVector apply_sum(const PauliSum& op, const StateVector& state) {
    require_dim(state, op.n_qubits());
    StateVector out(state.n_qubits());
    for (const auto& [p, c] : op.terms())
        kernels::accumulate_pauli(state.data(), out.data(), state.n_qubits(),
                                  kernels::PauliMask::of(p), c);
    return out;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) throw DimensionMismatch("inner product dimension mismatch");
    return kernels::inner(a.data(), b.data(), a.dim());
}

std::complex<double> expectation(const StateVector& state, const PauliString& p) {
    require_dim(state, p.n_qubits);
    return kernels::pauli_expectation(state.data(), state.n_qubits(), kernels::PauliMask::of(p));
}

double expectation(const StateVector& state, const PauliSum& op) {
    require_dim(state, op.n_qubits());
    std::complex<double> total = 0.0;
    for (const auto& [p, c] : op.terms()) total += c * expectation(state, p);
    if (std::abs(total.imag()) >= 1e-12)
        throw Error("expectation of Hermitian operator has imaginary part " +
                    std::to_string(total.imag()));
    return total.real();
}

}  // namespace vcqds
