#pragma once

/*
 * Discrete Wigner functions W_p = (1/D) <psi|Delta_p|psi>, D = N on odd
 * lattices and D = 2N on the doubled even lattice, plus the even-lattice
 * characteristic function and Weyl quantisation of lattice observables.
 *
 * On the even lattice the position marginal (sum over the second doubled
 * coordinate) equals |psi(mu)|^2 at j = 2 mu and vanishes at odd j; the
 * momentum marginal behaves the same way with the discrete Fourier
 * amplitudes N^{-1/2} sum_x omega^{-nu x} psi(x).
 */

#include "dps/cmatrix.hpp"
#include "dps/qops.hpp"

#include <random>
#include <span>
#include <vector>

namespace dps {

inline constexpr double kDefaultNormTol = 1e-8;

class QuantumState {
public:
    /// Throws InvalidArgument if | ||psi|| - 1 | > tol.
    explicit QuantumState(std::vector<cplx> amplitudes, double tol = kDefaultNormTol);

    static QuantumState basis(std::int64_t dim, std::int64_t k);

    /// Haar-like random pure state from normally distributed amplitudes.
    static QuantumState random(std::int64_t dim, std::mt19937_64& rng);

    std::int64_t dim() const noexcept { return static_cast<std::int64_t>(amps_.size()); }
    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    const cplx& operator[](std::size_t i) const noexcept { return amps_[i]; }

    QuantumState transformed(const CMatrix& u) const;

    /// Probabilities |<phi_nu|psi>|^2 in the basis phi_nu = N^{-1/2} sum_x omega^{nu x}|x>.
    std::vector<double> momentum_probabilities() const;
    std::vector<double> position_probabilities() const;

private:
    std::vector<cplx> amps_;
};

class WignerTable {
public:
    WignerTable(Parity parity, std::int64_t modulus, std::vector<double> grid,
                double max_imag = 0.0);

    Parity parity() const noexcept { return parity_; }
    std::int64_t modulus() const noexcept { return modulus_; }

    double operator()(std::int64_t m, std::int64_t n) const noexcept {
        return grid_[static_cast<std::size_t>(m * modulus_ + n)];
    }
    std::span<const double> grid() const noexcept { return grid_; }

    /// Largest imaginary part discarded when the table was built.
    double max_imag() const noexcept { return max_imag_; }
    double sum() const noexcept;

private:
    Parity parity_;
    std::int64_t modulus_;
    std::vector<double> grid_;
    double max_imag_;
};

/// Throws DimensionMismatch when the state does not live on the lattice.
WignerTable wigner_of(const QuantumState& state, const Lattice& lattice);

/// Same, reusing a precomputed phase-point family.
WignerTable wigner_of(const QuantumState& state, const Lattice& lattice, const PhaseFamily& family);

/// <psi| W^L_{j,k} |psi> for even N, doubled coordinates.
cplx characteristic_fn(const QuantumState& state, std::int64_t j, std::int64_t k);

/// The explicit sum sum_x tw^{-2jx - jk} psi(x) conj(psi(x+k)); agrees with
/// characteristic_fn.
cplx characteristic_fn_sum(const QuantumState& state, std::int64_t j, std::int64_t k);

/// All 4N^2 characteristic values, row-major in (j, k).
std::vector<cplx> characteristic_table(const QuantumState& state);

/// Double inverse Fourier transform (1/D^2) sum tw^{jj' + kk'} chi(j', k').
WignerTable wigner_from_characteristic(std::int64_t dim, std::span<const cplx> table);

struct Marginals {
    std::vector<double> position;  // sum over the second coordinate
    std::vector<double> momentum;  // sum over the first coordinate
};

Marginals marginals(const WignerTable& table);

/// (1/D) sum_p H(p) Delta_p for a real grid H in row-major order. Throws
/// DimensionMismatch if the grid is not M x M.
CMatrix weyl_quantize(std::span<const double> classical, const Lattice& lattice);

} // namespace dps
