#include "dps/wigner.hpp"

#include "dps/error.hpp"
#include "dps/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dps {

namespace {

void require_lattice_dim(const QuantumState& state, const Lattice& lattice) {
    if (state.dim() != lattice.dim()) {
        throw DimensionMismatch("state dimension " + std::to_string(state.dim()) +
                                " does not match lattice dimension " +
                                std::to_string(lattice.dim()));
    }
}

} // namespace

QuantumState::QuantumState(std::vector<cplx> amplitudes, double tol) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) throw InvalidArgument("state dimension must be >= 2");
    double norm2 = 0.0;
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvalidArgument("state has non-finite amplitudes");
        }
        norm2 += std::norm(a);
    }
    const double dev = std::abs(std::sqrt(norm2) - 1.0);
    if (dev > tol) {
        throw InvalidArgument("state is not normalised (norm deviation " + std::to_string(dev) + ")");
    }
}

QuantumState QuantumState::basis(std::int64_t dim, std::int64_t k) {
    std::vector<cplx> v(static_cast<std::size_t>(dim));
    v.at(static_cast<std::size_t>(reduce(k, dim))) = 1.0;
    return QuantumState(std::move(v));
}

QuantumState QuantumState::random(std::int64_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<cplx> v(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    for (auto& a : v) {
        a = {gauss(rng), gauss(rng)};
        norm2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : v) a *= scale;
    return QuantumState(std::move(v));
}

QuantumState QuantumState::transformed(const CMatrix& u) const {
    if (u.dim() != amps_.size()) throw DimensionMismatch("operator and state dimensions differ");
    std::vector<cplx> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i)
        for (std::size_t j = 0; j < amps_.size(); ++j) out[i] += u(i, j) * amps_[j];
    return QuantumState(std::move(out), 1e-6);
}

std::vector<double> QuantumState::position_probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const cplx& a) { return std::norm(a); });
    return p;
}

std::vector<double> QuantumState::momentum_probabilities() const {
    const auto n = static_cast<std::int64_t>(amps_.size());
    const RootsOfUnity w(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> p(amps_.size());
    for (std::int64_t nu = 0; nu < n; ++nu) {
        cplx acc = 0.0;
        for (std::int64_t x = 0; x < n; ++x) acc += w(-nu * x) * amps_[static_cast<std::size_t>(x)];
        p[static_cast<std::size_t>(nu)] = std::norm(acc * scale);
    }
    return p;
}

WignerTable::WignerTable(Parity parity, std::int64_t modulus, std::vector<double> grid,
                         double max_imag)
    : parity_(parity), modulus_(modulus), grid_(std::move(grid)), max_imag_(max_imag) {
    if (grid_.size() != static_cast<std::size_t>(modulus * modulus)) {
        throw DimensionMismatch("Wigner grid size does not match modulus");
    }
}

double WignerTable::sum() const noexcept { return std::accumulate(grid_.begin(), grid_.end(), 0.0); }

WignerTable wigner_of(const QuantumState& state, const Lattice& lattice, const PhaseFamily& family) {
    require_lattice_dim(state, lattice);
    if (family.modulus != lattice.modulus()) {
        throw DimensionMismatch("phase-point family does not belong to the lattice");
    }
    const auto values = kernels::parallel::expectations(state.amplitudes(), family);
    const double scale = 1.0 / lattice.normalisation();
    std::vector<double> grid(values.size());
    double max_imag = 0.0;
    for (std::size_t p = 0; p < values.size(); ++p) {
        grid[p] = scale * values[p].real();
        max_imag = std::max(max_imag, scale * std::abs(values[p].imag()));
    }
    return {lattice.parity(), lattice.modulus(), std::move(grid), max_imag};
}

WignerTable wigner_of(const QuantumState& state, const Lattice& lattice) {
    require_lattice_dim(state, lattice);
    return wigner_of(state, lattice, delta_family(lattice));
}

cplx characteristic_fn(const QuantumState& state, std::int64_t j, std::int64_t k) {
    const CMatrix w = weyl_leonhardt(state.dim(), j, k);
    const auto psi = state.amplitudes();
    cplx acc = 0.0;
    for (std::size_t a = 0; a < psi.size(); ++a) {
        cplx row = 0.0;
        for (std::size_t b = 0; b < psi.size(); ++b) row += w(a, b) * psi[b];
        acc += std::conj(psi[a]) * row;
    }
    return acc;
}

cplx characteristic_fn_sum(const QuantumState& state, std::int64_t j, std::int64_t k) {
    const std::int64_t n = state.dim();
    if (n % 2 != 0) throw ParityError("characteristic function is defined for even N");
    const RootsOfUnity tw(2 * n);
    cplx acc = 0.0;
    for (std::int64_t x = 0; x < n; ++x) {
        acc += tw(-2 * j * x - j * k) * state[static_cast<std::size_t>(x)] *
               std::conj(state[static_cast<std::size_t>(reduce(x + k, n))]);
    }
    return acc;
}

std::vector<cplx> characteristic_table(const QuantumState& state) {
    const std::int64_t m2 = 2 * state.dim();
    std::vector<cplx> out(static_cast<std::size_t>(m2 * m2));
    for (std::int64_t j = 0; j < m2; ++j)
        for (std::int64_t k = 0; k < m2; ++k)
            out[static_cast<std::size_t>(j * m2 + k)] = characteristic_fn(state, j, k);
    return out;
}

WignerTable wigner_from_characteristic(std::int64_t dim, std::span<const cplx> table) {
    const Lattice lattice(dim, Parity::even);
    const std::int64_t m2 = lattice.modulus();
    if (table.size() != static_cast<std::size_t>(m2 * m2)) {
        throw DimensionMismatch("characteristic table must have (2N)^2 entries");
    }
    const RootsOfUnity tw(m2);
    const double scale = 1.0 / (lattice.normalisation() * lattice.normalisation());
    std::vector<double> grid(table.size());
    double max_imag = 0.0;
    for (std::int64_t j = 0; j < m2; ++j)
        for (std::int64_t k = 0; k < m2; ++k) {
            cplx acc = 0.0;
            for (std::int64_t jp = 0; jp < m2; ++jp)
                for (std::int64_t kp = 0; kp < m2; ++kp)
                    acc += tw(j * jp + k * kp) * table[static_cast<std::size_t>(jp * m2 + kp)];
            acc *= scale;
            grid[static_cast<std::size_t>(j * m2 + k)] = acc.real();
            max_imag = std::max(max_imag, std::abs(acc.imag()));
        }
    return {Parity::even, m2, std::move(grid), max_imag};
}

Marginals marginals(const WignerTable& table) {
    const auto m = static_cast<std::size_t>(table.modulus());
    Marginals out{std::vector<double>(m), std::vector<double>(m)};
    const auto g = table.grid();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out.position[i] += g[i * m + j];
            out.momentum[j] += g[i * m + j];
        }
    return out;
}

CMatrix weyl_quantize(std::span<const double> classical, const Lattice& lattice) {
    if (classical.size() != lattice.num_points()) {
        throw DimensionMismatch("classical grid has " + std::to_string(classical.size()) +
                                " entries, lattice has " + std::to_string(lattice.num_points()));
    }
    const std::int64_t mod = lattice.modulus();
    CMatrix out(static_cast<std::size_t>(lattice.dim()));
    for (std::int64_t m = 0; m < mod; ++m)
        for (std::int64_t n = 0; n < mod; ++n) {
            const double h = classical[static_cast<std::size_t>(m * mod + n)];
            if (h == 0.0) continue;
            out += delta(lattice, m, n) * cplx(h);
        }
    out *= cplx(1.0 / lattice.normalisation());
    return out;
}

} // namespace dps
