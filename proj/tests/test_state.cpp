#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "vcqds/oracle.hpp"
#include "vcqds/state.hpp"

using namespace vcqds;
using testutil::dense_from_label;

namespace {

StateVector random_state(std::mt19937& rng, std::uint32_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    StateVector s(n);
    for (std::uint64_t i = 0; i < s.dim(); ++i) s[i] = {g(rng), g(rng)};
    s.normalize();
    return s;
}

}  // namespace

TEST_CASE("basis states and bitstrings") {
    auto s = StateVector::from_bitstring("0110");
    // qubit 0 leftmost: index = 2 + 4
    CHECK(s[6] == std::complex<double>(1.0, 0.0));
    CHECK(s.norm() == doctest::Approx(1.0));
    CHECK_THROWS_AS(StateVector::from_bitstring("012"), Error);
    CHECK_THROWS_AS(StateVector(15), Error);
}

TEST_CASE("pauli rotation on eigenstate gives a phase") {
    auto s = StateVector::zero_state(1);
    apply_pauli_rotation(s, PauliString::from_label("Z"), 0.3);
    CHECK(s[0].real() == doctest::Approx(std::cos(0.3)));
    CHECK(s[0].imag() == doctest::Approx(-std::sin(0.3)));
}

TEST_CASE("pi/2 X rotation maps |0> to -i|1>") {
    auto s = StateVector::zero_state(1);
    apply_pauli_rotation(s, PauliString::from_label("X"), M_PI / 2);
    CHECK(std::abs(s[0]) < 1e-15);
    CHECK(std::abs(s[1] - std::complex<double>(0, -1)) < 1e-15);
}

TEST_CASE("zero angle is the identity") {
    std::mt19937 rng(3);
    auto s = random_state(rng, 3);
    auto t = pauli_rotated(s, PauliString::from_label("XYZ"), 0.0);
    for (std::uint64_t i = 0; i < s.dim(); ++i) CHECK(std::abs(s[i] - t[i]) < 1e-16);
}

TEST_CASE("rotation and inverse restore the input") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_state(rng, 4);
        const auto p = PauliString::from_label(testutil::random_label(rng, 4));
        auto t = s;
        apply_pauli_rotation(t, p, 0.7321);
        CHECK(t.norm() == doctest::Approx(1.0).epsilon(1e-12));
        apply_pauli_rotation(t, p, -0.7321);
        for (std::uint64_t i = 0; i < s.dim(); ++i) CHECK(std::abs(s[i] - t[i]) < 1e-13);
    }
}

TEST_CASE("rotation agrees with dense matrix exponential") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::string label = testutil::random_label(rng, 3);
        if (label == "III") continue;
        const double theta = 0.911;
        auto s = random_state(rng, 3);
        const Eigen::MatrixXcd m = dense_from_label(label);
        const Eigen::MatrixXcd u =
            (std::cos(theta) * Eigen::MatrixXcd::Identity(8, 8)) -
            std::complex<double>(0, 1) * std::sin(theta) * m;
        const Eigen::VectorXcd expect = u * testutil::to_vec(s);
        apply_pauli_rotation(s, PauliString::from_label(label), theta);
        CHECK((testutil::to_vec(s) - expect).norm() < 1e-13);
    }
}

TEST_CASE("expectation values") {
    auto zero = StateVector::zero_state(1);
    PauliSum z(1);
    z.add(PauliString::from_label("Z"), 1.0);
    CHECK(expectation(zero, z) == doctest::Approx(1.0));

    // singlet has zero total Sz
    StateVector singlet(2);
    singlet[1] = 1.0 / std::sqrt(2.0);   // |10> : qubit0=1
    singlet[2] = -1.0 / std::sqrt(2.0);  // |01>
    PauliSum sz_total(2);
    sz_total.add(PauliString::from_label("ZI"), 0.5);
    sz_total.add(PauliString::from_label("IZ"), 0.5);
    CHECK(expectation(singlet, sz_total) == doctest::Approx(0.0));

    // six-qubit all-zeros: every ZZ bond gives +1
    auto six = StateVector::zero_state(6);
    PauliSum corr(6);
    const int bonds[7][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    for (auto& b : bonds) {
        std::string l(6, 'I');
        l[b[0]] = 'Z';
        l[b[1]] = 'Z';
        corr.add(PauliString::from_label(l), 1.0 / 7.0);
    }
    CHECK(expectation(six, corr) == doctest::Approx(1.0));
}

TEST_CASE("apply_sum matches dense matrix") {
    std::mt19937 rng(6);
    PauliSum h(3);
    h.add(PauliString::from_label("ZZI"), 0.7);
    h.add(PauliString::from_label("XII"), -0.4);
    h.add(PauliString::from_label("IYZ"), 0.25);
    Eigen::MatrixXcd m = 0.7 * dense_from_label("ZZI") - 0.4 * dense_from_label("XII") +
                         0.25 * dense_from_label("IYZ");
    auto s = random_state(rng, 3);
    auto hs = apply_sum(h, s);
    CHECK((testutil::to_vec(hs) - m * testutil::to_vec(s)).norm() < 1e-13);
}

TEST_CASE("dense propagator") {
    PauliSum hz(1);
    hz.add(PauliString::from_label("Z"), 1.0);
    DensePropagator prop(hz);

    auto zero = StateVector::zero_state(1);
    auto out = prop.propagate(zero, M_PI);
    CHECK(std::abs(out[0] - std::complex<double>(-1.0, 0.0)) < 1e-12);

    // t = 0 identity
    std::mt19937 rng(8);
    auto s = random_state(rng, 1);
    auto same = prop.propagate(s, 0.0);
    CHECK((testutil::to_vec(same) - testutil::to_vec(s)).norm() < 1e-14);
}

TEST_CASE("propagator composition") {
    std::mt19937 rng(9);
    PauliSum h(3);
    h.add(PauliString::from_label("ZZI"), 0.8);
    h.add(PauliString::from_label("IXX"), 0.5);
    h.add(PauliString::from_label("XII"), -0.3);
    DensePropagator prop(h);
    auto s = random_state(rng, 3);
    auto a = prop.propagate(prop.propagate(s, 0.37), 1.21);
    auto b = prop.propagate(s, 0.37 + 1.21);
    CHECK((testutil::to_vec(a) - testutil::to_vec(b)).norm() < 1e-12);
    CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("propagator short-time expansion") {
    PauliSum h(2);
    h.add(PauliString::from_label("ZZ"), 1.0);
    h.add(PauliString::from_label("XI"), 1.0);
    h.add(PauliString::from_label("IX"), 1.0);
    DensePropagator prop(h);
    std::mt19937 rng(10);
    auto s = random_state(rng, 2);
    const double t = 1e-4;
    auto exact = prop.propagate(s, t);
    auto hs = apply_sum(h, s);
    Eigen::VectorXcd first =
        testutil::to_vec(s) - std::complex<double>(0, t) * testutil::to_vec(hs);
    // ||exp(-iHt) - (1 - iHt)|| <= ||H||^2 t^2 / 2 with plenty of headroom
    CHECK((testutil::to_vec(exact) - first).norm() < 9.0 * t * t);
}

TEST_CASE("serial and parallel kernels are bit-identical") {
    std::mt19937 rng(11);
    for (std::uint32_t n : {3u, 6u, 9u}) {
        auto s = random_state(rng, n);
        const auto p = PauliString::from_label(testutil::random_label(rng, n));
        const auto mask = kernels::PauliMask::of(p);

        auto a = s, b = s;
        kernels::rotation_serial(a.data(), n, mask, 0.513);
        kernels::rotation_parallel(b.data(), n, mask, 0.513);
        for (std::uint64_t i = 0; i < a.dim(); ++i) CHECK(a[i] == b[i]);

        StateVector accs(n), accp(n);
        kernels::accumulate_pauli_serial(s.data(), accs.data(), n, mask, {0.3, 0.1});
        kernels::accumulate_pauli_parallel(s.data(), accp.data(), n, mask, {0.3, 0.1});
        for (std::uint64_t i = 0; i < accs.dim(); ++i) CHECK(accs[i] == accp[i]);

        CHECK(kernels::inner_serial(s.data(), a.data(), s.dim()) ==
              kernels::inner_parallel(s.data(), a.data(), s.dim()));
        CHECK(kernels::pauli_expectation_serial(s.data(), n, mask) ==
              kernels::pauli_expectation_parallel(s.data(), n, mask));
    }
}
