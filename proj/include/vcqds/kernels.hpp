#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include "vcqds/pauli.hpp"

namespace vcqds::kernels {

using cplx = std::complex<double>;

/// Unpacked Pauli operator for the amplitude kernels.
struct PauliMask {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    int y_exp = 0;  // i^{y_exp} with y_exp = popcount(x & z)

    static PauliMask of(const PauliString& p) { return {p.x_mask, p.z_mask, p.y_count()}; }
};

enum class Mode { Auto, ForceSerial, ForceParallel };

Mode mode();
void set_mode(Mode m);
int max_threads();
/// Clamp the worker count; n <= 0 restores the OpenMP default.
void set_max_threads(int n);

// e^{-i theta P} applied in place to 2^n amplitudes.
void rotation_serial(cplx* amps, std::uint32_t n, const PauliMask& p, double theta);
void rotation_parallel(cplx* amps, std::uint32_t n, const PauliMask& p, double theta);
void rotation(cplx* amps, std::uint32_t n, const PauliMask& p, double theta);

// out += coeff * (P in); in and out must not alias.
void accumulate_pauli_serial(const cplx* in, cplx* out, std::uint32_t n, const PauliMask& p,
                             cplx coeff);
void accumulate_pauli_parallel(const cplx* in, cplx* out, std::uint32_t n, const PauliMask& p,
                               cplx coeff);
void accumulate_pauli(const cplx* in, cplx* out, std::uint32_t n, const PauliMask& p, cplx coeff);

// <a|b>. Reductions accumulate fixed-size blocks in index order, so results
// are bit-identical for any thread count.
cplx inner_serial(const cplx* a, const cplx* b, std::size_t dim);
cplx inner_parallel(const cplx* a, const cplx* b, std::size_t dim);
cplx inner(const cplx* a, const cplx* b, std::size_t dim);

// <psi|P|psi>.
cplx pauli_expectation_serial(const cplx* amps, std::uint32_t n, const PauliMask& p);
cplx pauli_expectation_parallel(const cplx* amps, std::uint32_t n, const PauliMask& p);
cplx pauli_expectation(const cplx* amps, std::uint32_t n, const PauliMask& p);

}  // namespace vcqds::kernels
