#include "dps/qops.hpp"

#include "dps/error.hpp"

#include <string>

namespace dps {

namespace {

std::size_t idx(std::int64_t k, std::int64_t n) { return static_cast<std::size_t>(reduce(k, n)); }

void require_odd(std::int64_t dim, const char* what) {
    if (dim < 3 || dim % 2 == 0) {
        throw ParityError(std::string(what) + " requires odd N >= 3, got N=" + std::to_string(dim));
    }
}

void require_even(std::int64_t dim, const char* what) {
    if (dim < 2 || dim % 2 != 0) {
        throw ParityError(std::string(what) + " requires even N >= 2, got N=" + std::to_string(dim));
    }
}

void require_dim(std::int64_t dim) {
    if (dim < 2) throw InvalidArgument("Hilbert dimension must be >= 2");
}

} // namespace

std::string_view to_string(Parity p) noexcept { return p == Parity::odd ? "odd" : "even"; }

Lattice::Lattice(std::int64_t dim, Parity parity) : dim_(dim), parity_(parity) {
    if (parity == Parity::odd) {
        require_odd(dim, "odd lattice");
    } else {
        require_even(dim, "even lattice");
    }
}

Lattice Lattice::of(std::int64_t dim) {
    return {dim, dim % 2 == 0 ? Parity::even : Parity::odd};
}

CMatrix phase_op(std::int64_t dim) {
    require_dim(dim);
    const RootsOfUnity w(dim);
    CMatrix q(static_cast<std::size_t>(dim));
    for (std::int64_t k = 0; k < dim; ++k) q(idx(k, dim), idx(k, dim)) = w(k);
    return q;
}

CMatrix shift_op(std::int64_t dim) {
    require_dim(dim);
    CMatrix p(static_cast<std::size_t>(dim));
    for (std::int64_t k = 0; k < dim; ++k) p(idx(k - 1, dim), idx(k, dim)) = 1.0;
    return p;
}

CMatrix inversion_op(std::int64_t dim) {
    require_dim(dim);
    CMatrix t(static_cast<std::size_t>(dim));
    for (std::int64_t k = 0; k < dim; ++k) t(idx(-k, dim), idx(k, dim)) = 1.0;
    return t;
}

CMatrix weyl_cohendet(std::int64_t dim, std::int64_t m, std::int64_t n) {
    require_odd(dim, "weyl_cohendet");
    const RootsOfUnity w(dim);
    m = reduce(m, dim);
    n = reduce(n, dim);
    // P^{-2m}|k> = |k+2m>, then Q^{2n} multiplies by omega^{2n(k+2m)}.
    CMatrix out(static_cast<std::size_t>(dim));
    for (std::int64_t k = 0; k < dim; ++k) {
        out(idx(k + 2 * m, dim), idx(k, dim)) = w(reduce(-2 * m * n + 2 * n * (k + 2 * m), dim));
    }
    return out;
}

CMatrix weyl_symmetric(std::int64_t dim, std::int64_t m, std::int64_t n) {
    require_odd(dim, "weyl_symmetric");
    const RootsOfUnity w(dim);
    const std::int64_t half = (dim + 1) / 2;
    m = reduce(m, dim);
    n = reduce(n, dim);
    CMatrix out(static_cast<std::size_t>(dim));
    for (std::int64_t k = 0; k < dim; ++k) {
        const std::int64_t e = reduce(-reduce(m * n, dim) * half + n * (k + m), dim);
        out(idx(k + m, dim), idx(k, dim)) = w(e);
    }
    return out;
}

CMatrix delta_cohendet(std::int64_t dim, std::int64_t m, std::int64_t n) {
    require_odd(dim, "delta_cohendet");
    const RootsOfUnity w(dim);
    m = reduce(m, dim);
    n = reduce(n, dim);
    CMatrix out(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) {
        out(idx(i, dim), idx(2 * m - i, dim)) = w(reduce(2 * n * (i - m), dim));
    }
    return out;
}

CMatrix delta_leonhardt(std::int64_t dim, std::int64_t j, std::int64_t k) {
    require_even(dim, "delta_leonhardt");
    const std::int64_t m2 = 2 * dim;
    const RootsOfUnity tw(m2);
    j = reduce(j, m2);
    k = reduce(k, m2);
    CMatrix out(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) {
        out(idx(i, dim), idx(j - i, dim)) = tw(reduce(2 * k * i - k * j, m2));
    }
    return out;
}

CMatrix weyl_leonhardt(std::int64_t dim, std::int64_t j, std::int64_t k) {
    require_even(dim, "weyl_leonhardt");
    const std::int64_t m2 = 2 * dim;
    const RootsOfUnity tw(m2);
    j = reduce(j, m2);
    k = reduce(k, m2);
    // P^{-k}|x> = |x+k>, then Q^{-j} = tw^{-2j(x+k)}.
    CMatrix out(static_cast<std::size_t>(dim));
    for (std::int64_t x = 0; x < dim; ++x) {
        out(idx(x + k, dim), idx(x, dim)) = tw(reduce(j * k - 2 * j * (x + k), m2));
    }
    return out;
}

CMatrix delta(const Lattice& lattice, std::int64_t m, std::int64_t n) {
    return lattice.parity() == Parity::odd ? delta_cohendet(lattice.dim(), m, n)
                                           : delta_leonhardt(lattice.dim(), m, n);
}

PhaseFamily delta_family(const Lattice& lattice) {
    PhaseFamily f{lattice.modulus(), {}};
    f.ops.reserve(lattice.num_points());
    for (std::int64_t m = 0; m < f.modulus; ++m)
        for (std::int64_t n = 0; n < f.modulus; ++n) f.ops.push_back(delta(lattice, m, n));
    return f;
}

PhaseFamily integer_point_family(std::int64_t dim) {
    require_even(dim, "integer_point_family");
    PhaseFamily f{dim, {}};
    f.ops.reserve(static_cast<std::size_t>(dim * dim));
    for (std::int64_t m = 0; m < dim; ++m)
        for (std::int64_t n = 0; n < dim; ++n) f.ops.push_back(delta_leonhardt(dim, 2 * m, 2 * n));
    return f;
}

} // namespace dps
