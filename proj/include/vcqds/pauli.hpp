#pragma once

#include <bit>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcqds/errors.hpp"

namespace vcqds {

/// i^k for k taken mod 4.
inline std::complex<double> i_power(int k) {
    static constexpr std::complex<double> table[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return table[((k % 4) + 4) % 4];
}

/// Tensor product of single-qubit Paulis in symplectic form: bit i of x_mask
/// (z_mask) set means an X (Z) component on qubit i, both set means Y.
/// The stored string is exactly the Hermitian product of I/X/Y/Z factors;
/// phases produced by algebraic operations are returned separately.
struct PauliString {
    std::uint32_t n_qubits = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;

    PauliString() = default;
    PauliString(std::uint32_t n, std::uint64_t x, std::uint64_t z);

    /// Parse a label over {I,X,Y,Z}; leftmost character is qubit 0.
    static PauliString from_label(std::string_view label);

    static PauliString identity(std::uint32_t n) { return PauliString(n, 0, 0); }

    bool is_identity() const { return x_mask == 0 && z_mask == 0; }

    int y_count() const { return std::popcount(x_mask & z_mask); }

    char pauli_at(std::uint32_t qubit) const;
    std::string label() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend auto operator<=>(const PauliString& a, const PauliString& b) {
        if (auto c = a.n_qubits <=> b.n_qubits; c != 0) return c;
        if (auto c = a.z_mask <=> b.z_mask; c != 0) return c;
        return a.x_mask <=> b.x_mask;
    }
};

/// Result of a string product PQ = phase * string with phase = i^phase_exp.
struct PauliProduct {
    PauliString string;
    int phase_exp = 0;  // 0..3

    std::complex<double> phase() const { return i_power(phase_exp); }
};

/// Nonzero commutator [P,Q] = coeff * string with coeff = ±2i.
struct PauliCommutator {
    PauliString string;
    double imag_coeff = 0.0;  // [P,Q] = (i * imag_coeff) * string, imag_coeff = ±2

    std::complex<double> coeff() const { return {0.0, imag_coeff}; }
};

PauliProduct multiply(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);
std::optional<PauliCommutator> commutator(const PauliString& p, const PauliString& q);

/// Real linear combination of Pauli strings. Terms below the prune threshold
/// are dropped on insertion; all terms share n_qubits. Iteration order is the
/// deterministic (z_mask, x_mask) order of the underlying map.
class PauliSum {
  public:
    static constexpr double kDefaultPruneThreshold = 1e-14;

    PauliSum() = default;
    explicit PauliSum(std::uint32_t n_qubits, double prune_threshold = kDefaultPruneThreshold)
        : n_qubits_(n_qubits), prune_(prune_threshold) {}

    std::uint32_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void add(const PauliString& p, double coeff);
    double coefficient(const PauliString& p) const;

    PauliSum& operator+=(const PauliSum& other);
    PauliSum& operator*=(double scale);
    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator*(PauliSum a, double s) { return a *= s; }
    friend PauliSum operator*(double s, PauliSum a) { return a *= s; }

    /// Coefficient 2-norm.
    double norm() const;
    /// Plain coefficient dot product (shared-string coefficients multiplied).
    double dot(const PauliSum& other) const;

    const std::map<PauliString, double>& terms() const { return terms_; }

    friend bool operator==(const PauliSum&, const PauliSum&) = default;

  private:
    std::uint32_t n_qubits_ = 0;
    double prune_ = kDefaultPruneThreshold;
    std::map<PauliString, double> terms_;
};

/// Killing form restricted to its trace part: 2^{n+1} Tr(XY).
double killing_inner(const PauliSum& x, const PauliSum& y);

namespace detail {
void require_same_qubits(const PauliString& p, const PauliString& q);
}

}  // namespace vcqds
