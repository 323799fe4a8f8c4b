#pragma once

/*
 * The projective unitary representation S -> U(S) satisfying
 *
 *     U(S) Delta_p U(S)^dagger = Delta_{S.p}    for every phase point p.
 *
 * Closed forms for the generators (canonical basis indices i, k):
 *
 *   odd N,  omega = exp(2 pi i / N):
 *     U(h+) = N^{-1/2} sum omega^{(i-k)(i-k+N)/2} |i><k|
 *     U(h-) = sum omega^{i(i+N)/2} |i><i|
 *   even N, tw = exp(2 pi i / 2N), acting with Sp_2N on the ghost lattice:
 *     U(h+) = N^{-1/2} sum tw^{(i-k)^2} |i><k|
 *     U(h-) = sum tw^{i^2} |i><i|
 *
 * (i-k)(i-k+N) is always even, so the odd exponents are exact integers, and
 * both are invariant under i -> i + N. U(S) for general S is the product of
 * generator powers along decompose(S). No global phase is fixed; compare
 * results with equal_up_to_phase.
 */

#include "dps/cmatrix.hpp"
#include "dps/qops.hpp"
#include "dps/symplectic.hpp"

#include <optional>
#include <vector>

namespace dps {

inline constexpr double kDefaultCovarianceTol = 1e-10;

/// Covariance tolerance for a Hilbert dimension: 1e-10 up to N = 16, scaled
/// by sqrt(N) above.
double covariance_tolerance(std::int64_t dim);

class ProjUnitary {
public:
    /// Throws InvalidArgument if `matrix` is not unitary within `tol` and
    /// DimensionMismatch if it does not fit the lattice.
    ProjUnitary(CMatrix matrix, const Lattice& lattice, double tol = 1e-9);

    const CMatrix& matrix() const noexcept { return matrix_; }
    const Lattice& lattice() const noexcept { return lattice_; }
    Parity parity() const noexcept { return lattice_.parity(); }
    std::int64_t modulus() const noexcept { return lattice_.modulus(); }

private:
    CMatrix matrix_;
    Lattice lattice_;
};

ProjUnitary u_hplus(std::int64_t dim, Parity parity);
ProjUnitary u_hminus(std::int64_t dim, Parity parity);

/// U(h+) U(h-)^{-1} U(h+).
ProjUnitary u_ht(std::int64_t dim, Parity parity);

/// Product of generator unitaries along an explicit word.
ProjUnitary u_of_word(const GenWord& word, const Lattice& lattice);

/// U(S) along decompose(S). Throws ModulusMismatch when S is not over the
/// lattice modulus.
ProjUnitary u_of(const SympMat& s, const Lattice& lattice);

struct PhaseMatch {
    bool equivalent = false;
    std::optional<cplx> phase;
    /// max |A B^dagger - lambda I| together with ||lambda| - 1|.
    double residual = 0.0;
};

/// A and B agree up to a unit scalar: A B^dagger = lambda I. Throws
/// DimensionMismatch.
PhaseMatch equal_up_to_phase(const CMatrix& a, const CMatrix& b, double tol = 1e-9);

/// S.(m, n) mod M. Throws ModulusMismatch.
PhasePoint act(const SympMat& s, const PhasePoint& p);

/// Row-major indices of S.p for every point p of Z_M x Z_M.
std::vector<std::size_t> action_image(const SympMat& s);

/// max_p || U Delta_p U^dagger - Delta_{S.p} ||_inf over a precomputed
/// family. Throws ModulusMismatch.
double covariance_residual(const CMatrix& u, const SympMat& s, const PhaseFamily& family);

} // namespace dps
