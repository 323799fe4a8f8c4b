#pragma once

/*
 * Operators on the N-dimensional Hilbert space of a discrete phase space.
 *
 * Basis states |0>, ..., |N-1> are indexed canonically. With
 * omega = exp(2 pi i / N):
 *
 *   Q|k> = omega^k |k>,   P|k> = |k-1>,   T|k> = |-k>.
 *
 * Odd N uses the phase-point operators
 *
 *   Delta_{m,n} = omega^{-2mn} Q^{2n} P^{-2m} T = sum_i omega^{2n(i-m)} |i><2m-i|
 *
 * on the N x N lattice. Even N uses the half-integer ("ghost") lattice
 * {0, 1/2, ..., (2N-1)/2}^2, stored as doubled integer coordinates
 * (j, k) = (2m, 2n) in Z_2N, with tw = exp(2 pi i / 2N):
 *
 *   Delta_{j,k} = sum_i tw^{2ki - kj} |i><j-i|.
 *
 * Every phase exponent is reduced exactly in integer arithmetic before it is
 * looked up in a RootsOfUnity table.
 */

#include "dps/cmatrix.hpp"
#include "dps/modring.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace dps {

enum class Parity : std::uint8_t { odd, even };

std::string_view to_string(Parity p) noexcept;

/// A phase-space lattice: Hilbert dimension N and the modulus M of its phase
/// points (M = N for odd N, M = 2N for even N).
class Lattice {
public:
    /// Throws ParityError when N does not have the requested parity.
    Lattice(std::int64_t dim, Parity parity);

    /// Lattice with the parity of `dim`.
    static Lattice of(std::int64_t dim);

    std::int64_t dim() const noexcept { return dim_; }
    Parity parity() const noexcept { return parity_; }
    std::int64_t modulus() const noexcept { return parity_ == Parity::odd ? dim_ : 2 * dim_; }
    std::size_t num_points() const noexcept {
        return static_cast<std::size_t>(modulus() * modulus());
    }

    /// Normalisation D of the Wigner function and of Weyl quantisation.
    double normalisation() const noexcept { return static_cast<double>(modulus()); }

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    std::int64_t dim_;
    Parity parity_;
};

struct PhasePoint {
    Residue m;
    Residue n;

    std::int64_t modulus() const noexcept { return m.modulus(); }

    /// Row-major index m * M + n.
    std::size_t index() const noexcept {
        return static_cast<std::size_t>(m.value() * m.modulus() + n.value());
    }

    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

CMatrix phase_op(std::int64_t dim);
CMatrix shift_op(std::int64_t dim);
CMatrix inversion_op(std::int64_t dim);

/// omega^{-2mn} Q^{2n} P^{-2m}; odd N only.
CMatrix weyl_cohendet(std::int64_t dim, std::int64_t m, std::int64_t n);

/// omega^{-mn/2} Q^n P^{-m}, with 1/2 realised as (N+1)/2 mod N; odd N only.
CMatrix weyl_symmetric(std::int64_t dim, std::int64_t m, std::int64_t n);

/// Odd-lattice phase-point operator at (m, n).
CMatrix delta_cohendet(std::int64_t dim, std::int64_t m, std::int64_t n);

/// Even-lattice phase-point operator at doubled coordinates (j, k).
CMatrix delta_leonhardt(std::int64_t dim, std::int64_t j, std::int64_t k);

/// Even-lattice Weyl operator tw^{jk} Q^{-j} P^{-k} at doubled coordinates.
CMatrix weyl_leonhardt(std::int64_t dim, std::int64_t j, std::int64_t k);

/// Phase-point operator of the lattice at canonical coordinates (m, n) mod M.
CMatrix delta(const Lattice& lattice, std::int64_t m, std::int64_t n);

/// A family of operators indexed by points of Z_M x Z_M (row-major index
/// m * M + n).
struct PhaseFamily {
    std::int64_t modulus = 0;
    std::vector<CMatrix> ops;

    const CMatrix& at(std::int64_t m, std::int64_t n) const {
        return ops[static_cast<std::size_t>(reduce(m, modulus) * modulus + reduce(n, modulus))];
    }
    std::size_t dim() const noexcept { return ops.empty() ? 0 : ops.front().dim(); }
};

/// All phase-point operators of the lattice.
PhaseFamily delta_family(const Lattice& lattice);

/// Even N only: the N^2 integer points (2m, 2n) of the ghost lattice,
/// re-indexed by (m, n) in Z_N x Z_N.
PhaseFamily integer_point_family(std::int64_t dim);

} // namespace dps
