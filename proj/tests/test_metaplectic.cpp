#include "dps/error.hpp"
#include "dps/metaplectic.hpp"
#include "dps/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dps;
using dps::test::naive_mul;
using dps::test::omega_pow;
using dps::test::symmetric_to_canonical;

namespace {

// The printed N = 7 tables, as exponents of omega, rows and columns ordered
// i = -3, ..., 3.
constexpr int kHplus7[7][7] = {
    {0, 4, 2, 1, 1, 2, 4}, {4, 0, 4, 2, 1, 1, 2}, {2, 4, 0, 4, 2, 1, 1}, {1, 2, 4, 0, 4, 2, 1},
    {1, 1, 2, 4, 0, 4, 2}, {2, 1, 1, 2, 4, 0, 4}, {4, 2, 1, 1, 2, 4, 0},
};
constexpr int kHminus7[7] = {1, 2, 4, 0, 4, 2, 1};

double residual_vs_table(const CMatrix& u, std::int64_t n, auto entry) {
    double r = 0.0;
    for (std::size_t a = 0; a < static_cast<std::size_t>(n); ++a)
        for (std::size_t b = 0; b < static_cast<std::size_t>(n); ++b) {
            const auto i = symmetric_to_canonical(a, n), k = symmetric_to_canonical(b, n);
            r = std::max(r, std::abs(u(i, k) - entry(a, b)));
        }
    return r;
}

} // namespace

TEST_CASE("N = 7 closed forms reproduce the printed tables") {
    const double s = 1.0 / std::sqrt(7.0);
    CHECK(residual_vs_table(u_hplus(7, Parity::odd).matrix(), 7, [&](std::size_t a, std::size_t b) {
              return omega_pow(7, kHplus7[a][b]) * s;
          }) < 1e-12);
    CHECK(residual_vs_table(u_hminus(7, Parity::odd).matrix(), 7, [&](std::size_t a, std::size_t b) {
              return a == b ? omega_pow(7, kHminus7[a]) : cplx(0.0);
          }) < 1e-12);
}

TEST_CASE("N = 3 closed forms") {
    // I-order diag(omega^2, 1, omega^2).
    const CMatrix um = u_hminus(3, Parity::odd).matrix();
    CHECK(residual_vs_table(um, 3, [](std::size_t a, std::size_t b) {
              if (a != b) return cplx(0.0);
              return a == 1 ? cplx(1.0) : omega_pow(3, 2);
          }) < 1e-12);
}

TEST_CASE("N = 2 closed forms") {
    const double s = 1.0 / std::sqrt(2.0);
    const CMatrix up = u_hplus(2, Parity::even).matrix();
    CHECK(std::abs(up(0, 0) - s) < 1e-12);
    CHECK(std::abs(up(0, 1) - cplx(0, s)) < 1e-12);
    CHECK(std::abs(up(1, 0) - cplx(0, s)) < 1e-12);
    CHECK(std::abs(up(1, 1) - s) < 1e-12);
    const CMatrix um = u_hminus(2, Parity::even).matrix();
    CHECK(std::abs(um(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(um(1, 1) - cplx(0, 1)) < 1e-12);
    CHECK(std::abs(um(0, 1)) < 1e-12);

    const CMatrix p4 = naive_mul(naive_mul(up, up), naive_mul(up, up));
    const PhaseMatch pm = equal_up_to_phase(p4, CMatrix::identity(2));
    CHECK(pm.equivalent);
    REQUIRE(pm.phase);
    CHECK(std::abs(*pm.phase + 1.0) < 1e-12);
}

TEST_CASE("closed forms are periodic under i -> i + N") {
    for (std::int64_t n : {3, 5, 9}) {
        const CMatrix up = u_hplus(n, Parity::odd).matrix();
        const CMatrix um = u_hminus(n, Parity::odd).matrix();
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t ii = i + n;
            CHECK(std::abs(um(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) -
                           omega_pow(n, ii * (ii + n) / 2)) < 1e-12);
            for (std::int64_t k = 0; k < n; ++k) {
                const std::int64_t d = ii - k;
                CHECK(std::abs(up(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) -
                               omega_pow(n, d * (d + n) / 2) / std::sqrt(static_cast<double>(n))) < 1e-12);
            }
        }
    }
    for (std::int64_t n : {2, 4, 6}) {
        const CMatrix up = u_hplus(n, Parity::even).matrix();
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t k = 0; k < n; ++k) {
                const std::int64_t d = i + n - k;
                CHECK(std::abs(up(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) -
                               omega_pow(2 * n, d * d) / std::sqrt(static_cast<double>(n))) < 1e-12);
            }
    }
}

TEST_CASE("generator covariance") {
    for (std::int64_t n : {3, 5, 7, 9, 2, 4, 6}) {
        const Lattice lat = Lattice::of(n);
        const PhaseFamily f = delta_family(lat);
        const auto mod = lat.modulus();
        CHECK(covariance_residual(u_hplus(n, lat.parity()).matrix(), generator(Gen::plus, mod), f) < 1e-10);
        CHECK(covariance_residual(u_hminus(n, lat.parity()).matrix(), generator(Gen::minus, mod), f) < 1e-10);
        CHECK(covariance_residual(u_ht(n, lat.parity()).matrix(), h_t(mod), f) < 1e-10);
        // A wrong element must not pass.
        CHECK(covariance_residual(u_hplus(n, lat.parity()).matrix(), generator(Gen::minus, mod), f) > 0.1);
    }
    CHECK_THROWS_AS(covariance_residual(u_hplus(3, Parity::odd).matrix(), generator(Gen::plus, 5),
                                        delta_family(Lattice::of(3))),
                    ModulusMismatch);
}

TEST_CASE("equal_up_to_phase") {
    const CMatrix u = u_hplus(5, Parity::odd).matrix();
    const cplx phase = std::polar(1.0, 0.7);
    const PhaseMatch m = equal_up_to_phase(u * phase, u);
    CHECK(m.equivalent);
    REQUIRE(m.phase);
    CHECK(std::abs(*m.phase - phase) < 1e-12);
    CHECK_FALSE(equal_up_to_phase(u, u_hminus(5, Parity::odd).matrix()).equivalent);
    CHECK_FALSE(equal_up_to_phase(u * cplx(2.0), u).equivalent);
    CHECK_THROWS_AS(equal_up_to_phase(u, CMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("action on phase points") {
    const SympMat s(2, 1, 1, 1, 5);
    const PhasePoint p{Residue(1, 5), Residue(3, 5)};
    const PhasePoint q = act(s, p);
    CHECK(q.m.value() == 0);
    CHECK(q.n.value() == 4);
    const auto img = action_image(s);
    CHECK(img[p.index()] == q.index());
    CHECK_THROWS_AS(act(s, PhasePoint{Residue(1, 7), Residue(1, 7)}), ModulusMismatch);
}

TEST_CASE("projectivity and path independence") {
    std::mt19937_64 rng(17);
    for (std::int64_t n : {3, 5, 2}) {
        const Lattice lat = Lattice::of(n);
        const auto group = enumerate_group(lat.modulus());
        std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
        for (int t = 0; t < 60; ++t) {
            const SympMat s = group[pick(rng)], r = group[pick(rng)];
            const CMatrix lhs = u_of(s * r, lat).matrix();
            const CMatrix rhs = naive_mul(u_of(s, lat).matrix(), u_of(r, lat).matrix());
            CHECK(equal_up_to_phase(lhs, rhs).equivalent);
        }
        // Two different words for the same element give the same unitary up
        // to phase.
        for (const auto& s : group) {
            const GenWord a = decompose(s);
            const GenWord b = bfs_decompose(s, 32);
            CHECK(equal_up_to_phase(u_of_word(a, lat).matrix(), u_of_word(b, lat).matrix()).equivalent);
        }
    }
    CHECK_THROWS_AS(u_of(generator(Gen::plus, 3), Lattice::of(2)), ModulusMismatch);
}

TEST_CASE("generator powers close up to phase") {
    for (std::int64_t n : {3, 5, 7, 2, 4}) {
        const Lattice lat = Lattice::of(n);
        const auto mod = static_cast<std::uint64_t>(lat.modulus());
        for (const auto& u : {u_hplus(n, lat.parity()), u_hminus(n, lat.parity())}) {
            CHECK(equal_up_to_phase(matrix_power(u.matrix(), mod), CMatrix::identity(u.matrix().dim())).equivalent);
        }
    }
}

TEST_CASE("ProjUnitary validation") {
    CMatrix bad = CMatrix::identity(3);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(ProjUnitary(bad, Lattice::of(3)), InvalidArgument);
    CHECK_THROWS_AS(ProjUnitary(CMatrix::identity(4), Lattice::of(3)), DimensionMismatch);
    CHECK(covariance_tolerance(9) == kDefaultCovarianceTol);
    CHECK(covariance_tolerance(64) > kDefaultCovarianceTol);
}
