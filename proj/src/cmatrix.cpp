#include "dps/cmatrix.hpp"

#include "dps/error.hpp"
#include "dps/kernels.hpp"
#include "dps/modring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dps {

namespace {

void check_dims(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
}

} // namespace

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
    CMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx CMatrix::trace() const noexcept {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    check_dims(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    check_dims(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) noexcept {
    for (auto& x : data_) x *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    check_dims(a, b);
    return kernels::parallel::matmul(a, b);
}

double max_abs(const CMatrix& m) noexcept {
    double r = 0.0;
    for (const auto& x : m.data()) r = std::max(r, std::abs(x));
    return r;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    check_dims(a, b);
    double r = 0.0;
    const auto x = a.data();
    const auto y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(x[i] - y[i]));
    return r;
}

double unitarity_defect(const CMatrix& u) {
    return max_abs_diff(u.adjoint() * u, CMatrix::identity(u.dim()));
}

double hermiticity_defect(const CMatrix& a) { return max_abs_diff(a, a.adjoint()); }

CMatrix matrix_power(const CMatrix& m, std::uint64_t exponent) {
    CMatrix result = CMatrix::identity(m.dim());
    CMatrix base = m;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

cplx trace_inner(const CMatrix& a, const CMatrix& b) {
    check_dims(a, b);
    cplx t = 0.0;
    const auto x = a.data();
    const auto y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i) t += std::conj(x[i]) * y[i];
    return t;
}

RootsOfUnity::RootsOfUnity(std::int64_t order) : order_(order) {
    if (order < 1) throw InvalidArgument("root-of-unity order must be positive");
    table_.resize(static_cast<std::size_t>(order));
    for (std::int64_t k = 0; k < order; ++k) {
        // Evaluate on the shortest arc so that conjugate pairs come out exact.
        const std::int64_t s = 2 * k > order ? k - order : k;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(order);
        table_[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
    }
    // Exact values at the quarter turns.
    table_[0] = 1.0;
    if (order % 2 == 0) table_[static_cast<std::size_t>(order / 2)] = -1.0;
    if (order % 4 == 0) {
        table_[static_cast<std::size_t>(order / 4)] = cplx(0.0, 1.0);
        table_[static_cast<std::size_t>(3 * order / 4)] = cplx(0.0, -1.0);
    }
}

cplx RootsOfUnity::operator()(std::int64_t exponent) const noexcept {
    return table_[static_cast<std::size_t>(reduce(exponent, order_))];
}

} // namespace dps
