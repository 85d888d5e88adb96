#include "vcqds/kernels.hpp"

#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vcqds::kernels {

namespace {

Mode g_mode = Mode::Auto;
int g_max_threads = 0;  // 0 = OpenMP default

// Below this state size the fork/join overhead dominates.
constexpr std::uint32_t kParallelQubitCutoff = 12;

bool use_parallel(std::uint32_t n) {
#ifdef _OPENMP
    if (g_mode == Mode::ForceSerial) return false;
    if (omp_in_parallel()) return false;  // caller already parallelized a coarser loop
    if (max_threads() <= 1) return false;
    if (g_mode == Mode::ForceParallel) return true;
    return n >= kParallelQubitCutoff;
#else
    (void)n;
    return false;
#endif
}

}  // namespace

Mode mode() { return g_mode; }
void set_mode(Mode m) { g_mode = m; }

int max_threads() {
#ifdef _OPENMP
    const int avail = omp_get_max_threads();
    return (g_max_threads > 0 && g_max_threads < avail) ? g_max_threads : avail;
#else
    return 1;
#endif
}

void set_max_threads(int n) {
    g_max_threads = n;
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#endif
}

void rotation(cplx* amps, std::uint32_t n, const PauliMask& p, double theta) {
    if (use_parallel(n))
        rotation_parallel(amps, n, p, theta);
    else
        rotation_serial(amps, n, p, theta);
}

void accumulate_pauli(const cplx* in, cplx* out, std::uint32_t n, const PauliMask& p, cplx coeff) {
    if (use_parallel(n))
        accumulate_pauli_parallel(in, out, n, p, coeff);
    else
        accumulate_pauli_serial(in, out, n, p, coeff);
}

cplx inner(const cplx* a, const cplx* b, std::size_t dim) {
    if (use_parallel(dim >= 2 ? 63 - std::countl_zero(dim) : 0))
        return inner_parallel(a, b, dim);
    return inner_serial(a, b, dim);
}

cplx pauli_expectation(const cplx* amps, std::uint32_t n, const PauliMask& p) {
    if (use_parallel(n)) return pauli_expectation_parallel(amps, n, p);
    return pauli_expectation_serial(amps, n, p);
}

}  // namespace vcqds::kernels
