#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcqds/lie.hpp"
#include "vcqds/pauli.hpp"
#include "vcqds/state.hpp"

namespace vcqds {

/// Involution split of a commutator-closed basis. The involution is fixed to
/// Y-count parity (theta(g) = -g^T): odd-Y strings form k, even-Y strings
/// form m. h is a maximal abelian subalgebra of m, filled in by
/// cartan_subalgebra.
struct CartanSplit {
    LieBasis g;
    std::vector<PauliString> k_part;
    std::vector<PauliString> m_part;
    std::vector<PauliString> h_part;
};

/// Partition g by Y-count parity and verify the commutation relations
/// [k,k] in k, [m,m] in k, [k,m] in m pair by pair. Throws
/// InvolutionViolation when a relation fails (the input was not closed).
CartanSplit involution_split(const LieBasis& g);

/// Fill h_part greedily: start from the first term of seed found in m_part,
/// then scan m_part in basis order adding every string that commutes with all
/// current members. Throws SeedNotInM when no seed term lies in m_part.
CartanSplit cartan_subalgebra(CartanSplit split, const PauliSum& seed);

/// Exact conjugation e^{iaK} S e^{-iaK} term by term: anticommuting terms mix
/// as cos(2a) P + sin(2a) * (i K P); commuting terms pass through.
PauliSum adjoint_rotate(const PauliSum& sum, const PauliString& k, double a);

struct CartanOptions {
    double tolerance = 1e-10;          // relative residual outside span(h)
    double reconstruction_tol = 1e-9;  // relative norm of K h K^dag - H0
    int max_iterations = 10000;
    double grad_floor = 1e-12;  // gradient norm on the normalized objective
    int max_retries = 5;        // restarts with random angles on a bad stationary point
    std::uint64_t rng_seed = 0x9e3779b97f4a7c15ULL;
};

struct OptimizerReport {
    int iterations = 0;
    int retries = 0;
    double grad_norm = 0.0;
    double f_value = 0.0;  // Killing-form objective at the minimum
};

/// K = prod_i e^{i a_i k_i} with k_i in closure order, plus the Cartan
/// element h = K^dag H0 K expressed over h_strings. Depth of the emitted
/// propagator is independent of t.
struct CartanFactorization {
    std::uint32_t n_qubits = 0;
    std::vector<PauliString> k_generators;
    std::vector<double> k_angles;
    std::vector<PauliString> h_strings;
    std::vector<double> h_coefficients;
    double residual_norm = 0.0;  // relative to |H0|
    OptimizerReport report;
};

/// Minimize f(K) = <K v K^dag, H0> over the k angles in the adjoint
/// (coefficient-vector) representation; no 2^n matrices are ever formed. At
/// the minimum h = K^dag H0 K must lie in span(h_part) within opts.tolerance.
/// Throws NoConvergence or ResidualTooLarge.
CartanFactorization minimize_fK(const CartanSplit& split, const PauliSum& h0,
                                const CartanOptions& opts = {});

/// Closure -> involution split -> subalgebra seeded by H0 -> minimize.
CartanFactorization cartan_factorize(const PauliSum& h0, std::size_t closure_cap = 4096,
                                     const CartanOptions& opts = {},
                                     CartanSplit* split_out = nullptr);

/// e^{-i H0 t}|state> = K e^{-iht} K^dag |state>, in place.
void fast_forward_apply(const CartanFactorization& fact, double t, StateVector& state);
StateVector fast_forwarded(const CartanFactorization& fact, double t, const StateVector& state);

namespace detail {
/// Analytic gradient of the normalized objective at the given angles;
/// exposed for validation against finite differences.
std::vector<double> fk_gradient(const CartanSplit& split, const PauliSum& h0,
                                const std::vector<double>& angles, double* f_out = nullptr);
}  // namespace detail

/// Text artifact round trip; enough to re-emit the propagator without
/// re-optimizing.
void write_factorization(std::ostream& os, const CartanFactorization& fact);
CartanFactorization read_factorization(std::istream& is);
void save_factorization(const std::string& path, const CartanFactorization& fact);
CartanFactorization load_factorization(const std::string& path);

}  // namespace vcqds
