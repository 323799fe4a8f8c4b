#pragma once

/*
 * Independent checks on the closed-form construction.
 *
 * solve_covariance treats the N^2 entries of an unknown U as variables and
 * stacks U Delta_p - Delta_{S.p} U = 0 over every phase point p. The null
 * space of that system (numerical rank from an SVD, cutoff relative to the
 * largest singular value) is the space of intertwiners; when it is one
 * dimensional and its generator rescales to a unitary, that unitary is the
 * representation matrix up to phase.
 */

#include "dps/cmatrix.hpp"
#include "dps/qops.hpp"
#include "dps/symplectic.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dps {

inline constexpr double kNullspaceCutoff = 1e-9;

struct CovarianceSolution {
    std::size_t nullity = 0;
    std::vector<CMatrix> basis;
    std::vector<double> singular_values;  // descending
    std::optional<CMatrix> unitary;
};

/// Intertwiners of the family under S. Throws ModulusMismatch.
CovarianceSolution solve_covariance(const SympMat& s, const PhaseFamily& family,
                                    double cutoff = kNullspaceCutoff);

/// Simultaneous intertwiners under several index maps (each image[p] gives
/// the index of the target operator for point p).
CovarianceSolution solve_covariance(std::span<const std::vector<std::size_t>> images,
                                    const PhaseFamily& family, double cutoff = kNullspaceCutoff);

/// Shortest word in aggregated generator powers, found breadth first from
/// the identity. Throws DepthExceeded when S lies deeper than max_depth.
GenWord bfs_decompose(const SympMat& s, int max_depth);

struct Check {
    std::string name;
    double max_residual = 0.0;
    bool pass = false;
    /// Measured-only checks are reported but never fail a suite.
    bool asserted = true;
};

bool all_pass(std::span<const Check> checks) noexcept;

/// Hermiticity, unit trace, traciality Tr(Delta_p^dagger Delta_q) = N delta_pq
/// and (odd only) translation covariance under the Weyl operators. On even
/// lattices traciality is measured but not asserted.
std::vector<Check> verify_sw_kernel(const Lattice& lattice, double tol = 1e-12);

struct UniquenessReport {
    std::size_t nullity = 0;
    bool has_unitary = false;
    /// Phase between the oracle solution and the word-product construction.
    std::optional<cplx> phase;
    double phase_residual = 0.0;
};

UniquenessReport verify_uniqueness(const SympMat& s, const Lattice& lattice, double tol = 1e-9);

} // namespace dps
