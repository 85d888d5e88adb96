#include <bit>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vcqds/kernels.hpp"

namespace vcqds::kernels {

namespace detail {
inline std::uint64_t expand_index(std::uint64_t t, int pb) {
    const std::uint64_t low = (1ULL << pb) - 1;
    return ((t & ~low) << 1) | (t & low);
}

inline double parity_sign(std::uint64_t bits) {
    return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

constexpr std::size_t kBlock = 4096;
}  // namespace detail

#ifndef _OPENMP

// Without OpenMP the parallel entry points fall through to the serial kernels.
void rotation_parallel(cplx* amps, std::uint32_t n, const PauliMask& p, double theta) {
    rotation_serial(amps, n, p, theta);
}
void accumulate_pauli_parallel(const cplx* in, cplx* out, std::uint32_t n, const PauliMask& p,
                               cplx coeff) {
    accumulate_pauli_serial(in, out, n, p, coeff);
}
cplx inner_parallel(const cplx* a, const cplx* b, std::size_t dim) {
    return inner_serial(a, b, dim);
}
cplx pauli_expectation_parallel(const cplx* amps, std::uint32_t n, const PauliMask& p) {
    return pauli_expectation_serial(amps, n, p);
}

#else

void rotation_parallel(cplx* amps, std::uint32_t n, const PauliMask& p, double theta) {
    const std::int64_t dim = 1LL << n;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (p.x == 0) {
        const cplx f_plus = {c, -s};
        const cplx f_minus = {c, s};
#pragma omp parallel for schedule(static)
        for (std::int64_t b = 0; b < dim; ++b)
            amps[b] *= (std::popcount(p.z & static_cast<std::uint64_t>(b)) & 1) ? f_minus : f_plus;
        return;
    }
    const int pb = 63 - std::countl_zero(p.x);
    const cplx mis = cplx(0.0, -s) * i_power(p.y_exp);
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < dim / 2; ++t) {
        const std::uint64_t j = detail::expand_index(static_cast<std::uint64_t>(t), pb);
        const std::uint64_t k = j ^ p.x;
        const cplx aj = amps[j];
        const cplx ak = amps[k];
        amps[j] = c * aj + mis * detail::parity_sign(p.z & k) * ak;
        amps[k] = c * ak + mis * detail::parity_sign(p.z & j) * aj;
    }
}

void accumulate_pauli_parallel(const cplx* in, cplx* out, std::uint32_t n, const PauliMask& p,
                               cplx coeff) {
    const std::int64_t dim = 1LL << n;
    const cplx cy = coeff * i_power(p.y_exp);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < dim; ++b) {
        const std::uint64_t src = static_cast<std::uint64_t>(b) ^ p.x;
        out[b] += cy * detail::parity_sign(p.z & src) * in[src];
    }
}

// Block partials are combined serially in block order, which keeps the result
// independent of the number of threads.
cplx inner_parallel(const cplx* a, const cplx* b, std::size_t dim) {
    const std::size_t nblocks = (dim + detail::kBlock - 1) / detail::kBlock;
    std::vector<cplx> partials(nblocks, cplx(0.0));
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nblocks); ++blk) {
        const std::size_t base = static_cast<std::size_t>(blk) * detail::kBlock;
        const std::size_t end = std::min(dim, base + detail::kBlock);
        cplx partial = 0.0;
        for (std::size_t j = base; j < end; ++j) partial += std::conj(a[j]) * b[j];
        partials[blk] = partial;
    }
    cplx total = 0.0;
    for (const cplx& v : partials) total += v;
    return total;
}

cplx pauli_expectation_parallel(const cplx* amps, std::uint32_t n, const PauliMask& p) {
    const std::size_t dim = 1ULL << n;
    const std::size_t nblocks = (dim + detail::kBlock - 1) / detail::kBlock;
    std::vector<cplx> partials(nblocks, cplx(0.0));
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nblocks); ++blk) {
        const std::size_t base = static_cast<std::size_t>(blk) * detail::kBlock;
        const std::size_t end = std::min(dim, base + detail::kBlock);
        cplx partial = 0.0;
        for (std::size_t b = base; b < end; ++b)
            partial += std::conj(amps[b ^ p.x]) * detail::parity_sign(p.z & b) * amps[b];
        partials[blk] = partial;
    }
    cplx total = 0.0;
    for (const cplx& v : partials) total += v;
    return total * i_power(p.y_exp);
}

#endif  // _OPENMP

}  // namespace vcqds::kernels
