#include <bit>
#include <cmath>

#include "vcqds/kernels.hpp"

namespace vcqds::kernels {

namespace detail {

// Insert a zero bit at position pb, mapping [0, 2^{n-1}) onto the indices
// with bit pb clear.
inline std::uint64_t expand_index(std::uint64_t t, int pb) {
    const std::uint64_t low = (1ULL << pb) - 1;
    return ((t & ~low) << 1) | (t & low);
}

inline double parity_sign(std::uint64_t bits) {
    return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

constexpr std::size_t kBlock = 4096;

}  // namespace detail

void rotation_serial(cplx* amps, std::uint32_t n, const PauliMask& p, double theta) {
    const std::uint64_t dim = 1ULL << n;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (p.x == 0) {
        const cplx f_plus = {c, -s};   // e^{-i theta}
        const cplx f_minus = {c, s};   // e^{+i theta}
        for (std::uint64_t b = 0; b < dim; ++b)
            amps[b] *= (std::popcount(p.z & b) & 1) ? f_minus : f_plus;
        return;
    }
    const int pb = 63 - std::countl_zero(p.x);
    const cplx mis = cplx(0.0, -s) * i_power(p.y_exp);  // -i sin(theta) i^y
    for (std::uint64_t t = 0; t < dim / 2; ++t) {
        const std::uint64_t j = detail::expand_index(t, pb);
        const std::uint64_t k = j ^ p.x;
        const cplx aj = amps[j];
        const cplx ak = amps[k];
        amps[j] = c * aj + mis * detail::parity_sign(p.z & k) * ak;
        amps[k] = c * ak + mis * detail::parity_sign(p.z & j) * aj;
    }
}

void accumulate_pauli_serial(const cplx* in, cplx* out, std::uint32_t n, const PauliMask& p,
                             cplx coeff) {
    const std::uint64_t dim = 1ULL << n;
    const cplx cy = coeff * i_power(p.y_exp);
    for (std::uint64_t b = 0; b < dim; ++b) {
        const std::uint64_t src = b ^ p.x;
        out[b] += cy * detail::parity_sign(p.z & src) * in[src];
    }
}

cplx inner_serial(const cplx* a, const cplx* b, std::size_t dim) {
    cplx total = 0.0;
    for (std::size_t base = 0; base < dim; base += detail::kBlock) {
        const std::size_t end = std::min(dim, base + detail::kBlock);
        cplx partial = 0.0;
        for (std::size_t j = base; j < end; ++j) partial += std::conj(a[j]) * b[j];
        total += partial;
    }
    return total;
}

cplx pauli_expectation_serial(const cplx* amps, std::uint32_t n, const PauliMask& p) {
    const std::uint64_t dim = 1ULL << n;
    const cplx cy = i_power(p.y_exp);
    cplx total = 0.0;
    for (std::uint64_t base = 0; base < dim; base += detail::kBlock) {
        const std::uint64_t end = std::min<std::uint64_t>(dim, base + detail::kBlock);
        cplx partial = 0.0;
        for (std::uint64_t b = base; b < end; ++b)
            partial += std::conj(amps[b ^ p.x]) * detail::parity_sign(p.z & b) * amps[b];
        total += cy * partial;
    }
    return total;
}

}  // namespace vcqds::kernels
