#include "vcqds/pauli.hpp"

#include <cmath>

namespace vcqds {

PauliString::PauliString(std::uint32_t n, std::uint64_t x, std::uint64_t z)
    : n_qubits(n), x_mask(x), z_mask(z) {
    if (n == 0 || n > 64) throw Error("qubit count must be in [1,64], got " + std::to_string(n));
    const std::uint64_t valid = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    if ((x & ~valid) != 0 || (z & ~valid) != 0)
        throw Error("Pauli mask has bits outside the qubit range");
}

PauliString PauliString::from_label(std::string_view label) {
    if (label.empty()) throw Error("empty Pauli label");
    std::uint64_t x = 0, z = 0;
    for (std::size_t i = 0; i < label.size(); ++i) {
        switch (label[i]) {
            case 'I': break;
            case 'X': x |= 1ULL << i; break;
            case 'Y': x |= 1ULL << i; z |= 1ULL << i; break;
            case 'Z': z |= 1ULL << i; break;
            default:
                throw Error(std::string("invalid Pauli character '") + label[i] + "'");
        }
    }
    return PauliString(static_cast<std::uint32_t>(label.size()), x, z);
}

char PauliString::pauli_at(std::uint32_t qubit) const {
    const bool x = (x_mask >> qubit) & 1;
    const bool z = (z_mask >> qubit) & 1;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

std::string PauliString::label() const {
    std::string s(n_qubits, 'I');
    for (std::uint32_t q = 0; q < n_qubits; ++q) s[q] = pauli_at(q);
    return s;
}

namespace detail {
void require_same_qubits(const PauliString& p, const PauliString& q) {
    if (p.n_qubits != q.n_qubits)
        throw DimensionMismatch("Pauli strings act on " + std::to_string(p.n_qubits) +
                                " vs " + std::to_string(q.n_qubits) + " qubits");
}
}  // namespace detail

PauliProduct multiply(const PauliString& p, const PauliString& q) {
    detail::require_same_qubits(p, q);
    PauliString r(p.n_qubits, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask);
    // With P = i^{y(P)} X^{x} Z^{z}, the X/Z reordering contributes
    // (-1)^{|z_P & x_Q|} and the Y bookkeeping i^{y(P)+y(Q)-y(R)}.
    const int ph = p.y_count() + q.y_count() - r.y_count() +
                   2 * std::popcount(p.z_mask & q.x_mask);
    return {r, ((ph % 4) + 4) % 4};
}

bool commutes(const PauliString& p, const PauliString& q) {
    detail::require_same_qubits(p, q);
    const int sym = std::popcount(p.x_mask & q.z_mask) + std::popcount(p.z_mask & q.x_mask);
    return (sym & 1) == 0;
}

std::optional<PauliCommutator> commutator(const PauliString& p, const PauliString& q) {
    if (commutes(p, q)) return std::nullopt;
    // [P,Q] = 2 PQ for anticommuting strings; the phase of PQ is ±i here.
    const PauliProduct pq = multiply(p, q);
    const double imag = (pq.phase_exp == 1) ? 2.0 : -2.0;
    return PauliCommutator{pq.string, imag};
}

void PauliSum::add(const PauliString& p, double coeff) {
    if (terms_.empty() && n_qubits_ == 0) n_qubits_ = p.n_qubits;
    if (p.n_qubits != n_qubits_)
        throw DimensionMismatch("term acts on " + std::to_string(p.n_qubits) +
                                " qubits, sum on " + std::to_string(n_qubits_));
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (std::abs(coeff) >= prune_) terms_.emplace(p, coeff);
        return;
    }
    it->second += coeff;
    if (std::abs(it->second) < prune_) terms_.erase(it);
}

double PauliSum::coefficient(const PauliString& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0.0 : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
    if (!other.empty() && !empty() && other.n_qubits_ != n_qubits_)
        throw DimensionMismatch("cannot add sums on different qubit counts");
    if (n_qubits_ == 0) n_qubits_ = other.n_qubits_;
    for (const auto& [p, c] : other.terms_) add(p, c);
    return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
    if (scale == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= scale;
    return *this;
}

double PauliSum::norm() const {
    double s = 0.0;
    for (const auto& [p, c] : terms_) s += c * c;
    return std::sqrt(s);
}

double PauliSum::dot(const PauliSum& other) const {
    // Iterate the smaller map.
    const PauliSum& a = size() <= other.size() ? *this : other;
    const PauliSum& b = size() <= other.size() ? other : *this;
    double s = 0.0;
    for (const auto& [p, c] : a.terms()) s += c * b.coefficient(p);
    return s;
}

double killing_inner(const PauliSum& x, const PauliSum& y) {
    if (!x.empty() && !y.empty() && x.n_qubits() != y.n_qubits())
        throw DimensionMismatch("Killing form operands act on different qubit counts");
    const std::uint32_t n = x.empty() ? y.n_qubits() : x.n_qubits();
    // Tr(P_i P_j) = 2^n delta_ij over the string basis.
    return std::ldexp(x.dot(y), static_cast<int>(2 * n + 1));
}

}  // namespace vcqds
