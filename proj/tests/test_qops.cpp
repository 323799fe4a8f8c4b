#include "dps/error.hpp"
#include "dps/qops.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace dps;
using dps::test::naive_mul;
using dps::test::naive_pow;
using dps::test::omega_pow;

namespace {

constexpr double kTol = 1e-12;

std::int64_t md(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

// Q^a P^b built by repeated multiplication of the basic operators.
CMatrix qp_power(std::int64_t n, std::int64_t a, std::int64_t b) {
    return naive_mul(naive_pow(phase_op(n), md(a, n)), naive_pow(shift_op(n), md(b, n)));
}

} // namespace

TEST_CASE("basic operators") {
    const CMatrix q = phase_op(3);
    CHECK(std::abs(q(1, 1) - omega_pow(3, 1)) < kTol);
    CHECK(std::abs(q(0, 1)) < kTol);
    const CMatrix p = shift_op(3);
    // P|0> = |2>, so column 0 has its one in row 2.
    CHECK(std::abs(p(2, 0) - 1.0) < kTol);
    CHECK(std::abs(p(0, 1) - 1.0) < kTol);
    CHECK(max_abs_diff(inversion_op(2), CMatrix::identity(2)) < kTol);
}

TEST_CASE("Weyl commutation PQ = omega QP and T involution") {
    for (std::int64_t n = 2; n <= 12; ++n) {
        const CMatrix q = phase_op(n), p = shift_op(n), t = inversion_op(n);
        CHECK(max_abs_diff(naive_mul(p, q), naive_mul(q, p) * omega_pow(n, 1)) < kTol);
        CHECK(max_abs_diff(naive_pow(q, n), CMatrix::identity(n)) < 1e-11);
        CHECK(max_abs_diff(naive_pow(p, n), CMatrix::identity(n)) < kTol);
        CHECK(max_abs_diff(naive_mul(t, t), CMatrix::identity(n)) < kTol);
        CHECK(hermiticity_defect(t) < kTol);
        // T Q T = Q^-1.
        CHECK(max_abs_diff(naive_mul(naive_mul(t, q), t), q.adjoint()) < kTol);
    }
}

TEST_CASE("Weyl operators against explicit powers") {
    CHECK(max_abs_diff(weyl_cohendet(3, 1, 0), shift_op(3)) < kTol);
    for (std::int64_t n : {3, 5, 7}) {
        for (std::int64_t m = 0; m < n; ++m)
            for (std::int64_t k = 0; k < n; ++k) {
                const CMatrix wc = qp_power(n, 2 * k, -2 * m) * omega_pow(n, -2 * m * k);
                CHECK(max_abs_diff(weyl_cohendet(n, m, k), wc) < 1e-11);
                // omega^{1/2} is omega^{(N+1)/2}.
                const CMatrix ws = qp_power(n, k, -m) * omega_pow(n, -m * k * (n + 1) / 2);
                CHECK(max_abs_diff(weyl_symmetric(n, m, k), ws) < 1e-11);
            }
    }
    CHECK(std::abs(omega_pow(3, 2) * omega_pow(3, 2) - omega_pow(3, 1)) < kTol);
    CHECK_THROWS_AS(weyl_cohendet(4, 0, 0), ParityError);
    CHECK_THROWS_AS(weyl_symmetric(4, 0, 0), ParityError);
}

TEST_CASE("odd phase-point operators") {
    CHECK(max_abs_diff(delta_cohendet(3, 0, 0), inversion_op(3)) < kTol);
    for (std::int64_t n : {3, 5, 7}) {
        CMatrix sum(static_cast<std::size_t>(n));
        for (std::int64_t m = 0; m < n; ++m)
            for (std::int64_t k = 0; k < n; ++k) {
                const CMatrix d = delta_cohendet(n, m, k);
                const CMatrix expected = naive_mul(weyl_cohendet(n, m, k), inversion_op(n));
                CHECK(max_abs_diff(d, expected) < 1e-11);
                // Entrywise form: omega^{2k(i-m)} at (i, 2m-i).
                for (std::int64_t i = 0; i < n; ++i) {
                    const auto c = static_cast<std::size_t>(md(2 * m - i, n));
                    CHECK(std::abs(d(static_cast<std::size_t>(i), c) - omega_pow(n, 2 * k * (i - m))) < kTol);
                }
                CHECK(max_abs_diff(d, delta(Lattice(n, Parity::odd), m, k)) == 0.0);
                sum += d;
            }
        CHECK(max_abs_diff(sum, CMatrix::identity(n) * cplx(static_cast<double>(n))) < 1e-10);
    }
}

TEST_CASE("odd Stratonovich-Weyl properties") {
    for (std::int64_t n : {3, 5, 7}) {
        const PhaseFamily f = delta_family(Lattice(n, Parity::odd));
        REQUIRE(f.ops.size() == static_cast<std::size_t>(n * n));
        for (std::size_t p = 0; p < f.ops.size(); ++p) {
            CHECK(hermiticity_defect(f.ops[p]) < kTol);
            CHECK(std::abs(f.ops[p].trace() - 1.0) < kTol);
            for (std::size_t q = 0; q < f.ops.size(); ++q) {
                const cplx t = (naive_mul(f.ops[p].adjoint(), f.ops[q])).trace();
                CHECK(std::abs(t - (p == q ? static_cast<double>(n) : 0.0)) < 1e-11);
            }
        }
    }
}

TEST_CASE("even phase-point operators") {
    const CMatrix x = delta_leonhardt(2, 1, 0);
    CHECK(std::abs(x(0, 1) - 1.0) < kTol);
    CHECK(std::abs(x(1, 0) - 1.0) < kTol);
    CHECK(std::abs(x(0, 0)) < kTol);
    CHECK(max_abs_diff(delta_leonhardt(2, 0, 0), CMatrix::identity(2)) < kTol);

    for (std::int64_t n : {2, 4, 6}) {
        const std::int64_t m2 = 2 * n;
        CMatrix sum(static_cast<std::size_t>(n));
        for (std::int64_t j = 0; j < m2; ++j)
            for (std::int64_t k = 0; k < m2; ++k) {
                const CMatrix d = delta_leonhardt(n, j, k);
                CHECK(hermiticity_defect(d) < kTol);
                // Trace is 1 + (-1)^k on even j and 0 on odd j.
                const double tr = (j % 2 == 0) ? 1.0 + (k % 2 == 0 ? 1.0 : -1.0) : 0.0;
                CHECK(std::abs(d.trace() - tr) < 1e-11);
                for (std::int64_t i = 0; i < n; ++i) {
                    const auto c = static_cast<std::size_t>(md(j - i, n));
                    CHECK(std::abs(d(static_cast<std::size_t>(i), c) - omega_pow(m2, 2 * k * i - k * j)) < kTol);
                }
                sum += d;
            }
        CHECK(max_abs_diff(sum, CMatrix::identity(n) * cplx(static_cast<double>(m2))) < 1e-10);
    }
}

TEST_CASE("even Weyl operators and the Fourier form of the kernel") {
    for (std::int64_t n : {2, 4}) {
        const std::int64_t m2 = 2 * n;
        for (std::int64_t j = 0; j < m2; ++j)
            for (std::int64_t k = 0; k < m2; ++k) {
                const CMatrix w = qp_power(n, -j, -k) * omega_pow(m2, j * k);
                CHECK(max_abs_diff(weyl_leonhardt(n, j, k), w) < 1e-11);
                CHECK(unitarity_defect(weyl_leonhardt(n, j, k)) < 1e-12);
            }
        // The sum runs over the doubled grid, so the prefactor is 1/(2N).
        for (std::int64_t j = 0; j < m2; ++j)
            for (std::int64_t k = 0; k < m2; ++k) {
                CMatrix acc(static_cast<std::size_t>(n));
                for (std::int64_t a = 0; a < m2; ++a)
                    for (std::int64_t b = 0; b < m2; ++b)
                        acc += weyl_leonhardt(n, a, b) * omega_pow(m2, j * a + k * b);
                acc *= cplx(1.0 / static_cast<double>(m2));
                CHECK(max_abs_diff(acc, delta_leonhardt(n, j, k)) < 1e-11);
            }
    }
}

TEST_CASE("lattices and families") {
    CHECK(Lattice(4, Parity::even).modulus() == 8);
    CHECK(Lattice(5, Parity::odd).num_points() == 25);
    CHECK(Lattice::of(6).parity() == Parity::even);
    CHECK_THROWS_AS(Lattice(4, Parity::odd), ParityError);
    CHECK_THROWS_AS(Lattice(3, Parity::even), ParityError);
    CHECK_THROWS_AS(delta_cohendet(2, 0, 0), ParityError);
    CHECK_THROWS_AS(delta_leonhardt(3, 0, 0), ParityError);
    CHECK_THROWS_AS(integer_point_family(3), ParityError);

    const PhaseFamily ghost = delta_family(Lattice(2, Parity::even));
    CHECK(ghost.ops.size() == 16);
    CHECK(max_abs_diff(ghost.at(1, 0), delta_leonhardt(2, 1, 0)) == 0.0);
    CHECK(max_abs_diff(ghost.at(-1, 5), delta_leonhardt(2, 3, 1)) == 0.0);

    const PhaseFamily ints = integer_point_family(4);
    CHECK(ints.modulus == 4);
    for (std::int64_t m = 0; m < 4; ++m)
        for (std::int64_t n = 0; n < 4; ++n)
            CHECK(max_abs_diff(ints.at(m, n), delta_leonhardt(4, 2 * m, 2 * n)) == 0.0);
    // At N = 2 every integer-point operator is the identity.
    for (const auto& op : integer_point_family(2).ops) CHECK(max_abs_diff(op, CMatrix::identity(2)) < kTol);
}
