#include "dps/metaplectic.hpp"

#include "dps/error.hpp"
#include "dps/kernels.hpp"

#include <cmath>
#include <string>

namespace dps {

double covariance_tolerance(std::int64_t dim) {
    return dim <= 16 ? kDefaultCovarianceTol
                     : kDefaultCovarianceTol * std::sqrt(static_cast<double>(dim));
}

ProjUnitary::ProjUnitary(CMatrix matrix, const Lattice& lattice, double tol)
    : matrix_(std::move(matrix)), lattice_(lattice) {
    if (static_cast<std::int64_t>(matrix_.dim()) != lattice.dim()) {
        throw DimensionMismatch("unitary dimension does not match lattice");
    }
    const double defect = unitarity_defect(matrix_);
    if (!(defect < tol)) {
        throw InvalidArgument("matrix is not unitary (defect " + std::to_string(defect) + ")");
    }
}

ProjUnitary u_hplus(std::int64_t dim, Parity parity) {
    const Lattice lattice(dim, parity);
    const auto n = static_cast<std::size_t>(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    CMatrix u(n);
    if (parity == Parity::odd) {
        const RootsOfUnity w(dim);
        for (std::int64_t i = 0; i < dim; ++i)
            for (std::int64_t k = 0; k < dim; ++k) {
                const std::int64_t d = i - k;
                u(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = scale * w(d * (d + dim) / 2);
            }
    } else {
        const RootsOfUnity tw(2 * dim);
        for (std::int64_t i = 0; i < dim; ++i)
            for (std::int64_t k = 0; k < dim; ++k) {
                const std::int64_t d = i - k;
                u(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = scale * tw(d * d);
            }
    }
    return {std::move(u), lattice};
}

ProjUnitary u_hminus(std::int64_t dim, Parity parity) {
    const Lattice lattice(dim, parity);
    std::vector<cplx> diag(static_cast<std::size_t>(dim));
    if (parity == Parity::odd) {
        const RootsOfUnity w(dim);
        for (std::int64_t i = 0; i < dim; ++i) diag[static_cast<std::size_t>(i)] = w(i * (i + dim) / 2);
    } else {
        const RootsOfUnity tw(2 * dim);
        for (std::int64_t i = 0; i < dim; ++i) diag[static_cast<std::size_t>(i)] = tw(i * i);
    }
    return {CMatrix::diagonal(diag), lattice};
}

ProjUnitary u_ht(std::int64_t dim, Parity parity) {
    const auto plus = u_hplus(dim, parity);
    const auto minus = u_hminus(dim, parity);
    return {plus.matrix() * minus.matrix().adjoint() * plus.matrix(), plus.lattice()};
}

ProjUnitary u_of_word(const GenWord& word, const Lattice& lattice) {
    if (word.modulus() != lattice.modulus()) {
        throw ModulusMismatch("word over Z_" + std::to_string(word.modulus()) +
                              " does not act on a lattice of modulus " +
                              std::to_string(lattice.modulus()));
    }
    const CMatrix plus = u_hplus(lattice.dim(), lattice.parity()).matrix();
    const CMatrix minus = u_hminus(lattice.dim(), lattice.parity()).matrix();
    CMatrix u = CMatrix::identity(static_cast<std::size_t>(lattice.dim()));
    for (const auto& f : word.factors()) {
        u = u * matrix_power(f.gen == Gen::plus ? plus : minus, static_cast<std::uint64_t>(f.exp));
    }
    return {std::move(u), lattice};
}

ProjUnitary u_of(const SympMat& s, const Lattice& lattice) {
    if (s.modulus() != lattice.modulus()) {
        throw ModulusMismatch("matrix over Z_" + std::to_string(s.modulus()) +
                              " does not act on a lattice of modulus " +
                              std::to_string(lattice.modulus()));
    }
    return u_of_word(decompose(s), lattice);
}

PhaseMatch equal_up_to_phase(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.dim() != b.dim()) throw DimensionMismatch("equal_up_to_phase: dimensions differ");
    const CMatrix c = a * b.adjoint();
    const cplx lambda = c.trace() / static_cast<double>(a.dim());
    const double off = max_abs_diff(c, CMatrix::identity(a.dim()) * lambda);
    const double residual = std::max(off, std::abs(std::abs(lambda) - 1.0));
    PhaseMatch out;
    out.residual = residual;
    out.equivalent = residual < tol;
    if (out.equivalent) out.phase = lambda / std::abs(lambda);
    return out;
}

PhasePoint act(const SympMat& s, const PhasePoint& p) {
    if (s.modulus() != p.modulus() || p.n.modulus() != p.m.modulus()) {
        throw ModulusMismatch("symplectic matrix and phase point use different moduli");
    }
    return {s.a() * p.m + s.b() * p.n, s.c() * p.m + s.d() * p.n};
}

std::vector<std::size_t> action_image(const SympMat& s) {
    const auto mod = s.modulus();
    std::vector<std::size_t> image(static_cast<std::size_t>(mod * mod));
    for (std::int64_t m = 0; m < mod; ++m)
        for (std::int64_t n = 0; n < mod; ++n) {
            const PhasePoint p{Residue(m, mod), Residue(n, mod)};
            image[p.index()] = act(s, p).index();
        }
    return image;
}

double covariance_residual(const CMatrix& u, const SympMat& s, const PhaseFamily& family) {
    if (s.modulus() != family.modulus) {
        throw ModulusMismatch("matrix modulus differs from the phase-point family modulus");
    }
    const auto image = action_image(s);
    return kernels::parallel::covariance_residual(u, family, image);
}

} // namespace dps
