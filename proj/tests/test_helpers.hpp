#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>

#include "vcqds/pauli.hpp"
#include "vcqds/state.hpp"

namespace testutil {

using cplx = std::complex<double>;

// Dense matrix of a Pauli label built from literal 2x2 factors, independent
// of the library's symplectic representation. Leftmost character is qubit 0,
// which is the fastest-varying index bit, so qubit 0 is the RIGHT factor of
// the Kronecker product.
inline Eigen::Matrix2cd single_pauli(char c) {
    Eigen::Matrix2cd m;
    switch (c) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::runtime_error("bad pauli char");
    }
    return m;
}

inline Eigen::MatrixXcd dense_from_label(const std::string& label) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
    for (auto it = label.begin(); it != label.end(); ++it) {
        const Eigen::Matrix2cd f = single_pauli(*it);
        Eigen::MatrixXcd out(m.rows() * 2, m.cols() * 2);
        out.block(0, 0, m.rows(), m.cols()) = f(0, 0) * m;
        out.block(0, m.cols(), m.rows(), m.cols()) = f(0, 1) * m;
        out.block(m.rows(), 0, m.rows(), m.cols()) = f(1, 0) * m;
        out.block(m.rows(), m.cols(), m.rows(), m.cols()) = f(1, 1) * m;
        m = std::move(out);
    }
    return m;
}

inline std::string random_label(std::mt19937& rng, int n) {
    static const char chars[] = "IXYZ";
    std::uniform_int_distribution<int> d(0, 3);
    std::string s;
    for (int i = 0; i < n; ++i) s += chars[d(rng)];
    return s;
}

inline Eigen::VectorXcd to_vec(const vcqds::StateVector& s) {
    Eigen::VectorXcd v(s.dim());
    for (std::uint64_t i = 0; i < s.dim(); ++i) v(i) = s[i];
    return v;
}

inline double fidelity(const vcqds::StateVector& a, const vcqds::StateVector& b) {
    return std::abs(vcqds::inner(a, b));
}

}  // namespace testutil
