#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "vcqds/kernels.hpp"
#include "vcqds/pauli.hpp"

namespace vcqds {

/// Dense 2^n amplitude vector. Amplitude index bit i holds qubit i, so
/// qubit 0 is the fastest-varying bit of the index.
class StateVector {
  public:
    static constexpr std::uint32_t kMaxQubits = 14;

    StateVector() = default;
    explicit StateVector(std::uint32_t n_qubits);

    static StateVector zero_state(std::uint32_t n_qubits);
    static StateVector basis_state(std::uint32_t n_qubits, std::uint64_t index);
    /// Bitstring over {0,1}; leftmost character is qubit 0.
    static StateVector from_bitstring(std::string_view bits);

    std::uint32_t n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return 1ULL << n_qubits_; }

    std::complex<double>* data() { return amps_.data(); }
    const std::complex<double>* data() const { return amps_.data(); }
    std::complex<double>& operator[](std::uint64_t i) { return amps_[i]; }
    const std::complex<double>& operator[](std::uint64_t i) const { return amps_[i]; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

    double norm() const;
    void normalize();

  private:
    std::uint32_t n_qubits_ = 0;
    std::vector<std::complex<double>> amps_;
};

/// e^{-i theta P} |psi>, in place.
void apply_pauli_rotation(StateVector& state, const PauliString& p, double theta);
/// Pure variant.
StateVector pauli_rotated(const StateVector& state, const PauliString& p, double theta);

/// accumulator += coeff * P |state|.
void accumulate_pauli(const StateVector& state, const PauliString& p,
                      std::complex<double> coeff, StateVector& accumulator);

/// O |psi> for a Pauli sum.
StateVector apply_sum(const PauliSum& op, const StateVector& state);

std::complex<double> inner(const StateVector& a, const StateVector& b);

/// <psi|O|psi> for Hermitian O (real coefficients). The accumulated imaginary
/// part must stay below 1e-12 or the call throws.
double expectation(const StateVector& state, const PauliSum& op);
std::complex<double> expectation(const StateVector& state, const PauliString& p);

}  // namespace vcqds
