#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dps {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static CMatrix identity(std::size_t dim);
    static CMatrix diagonal(std::span<const cplx> diag);

    std::size_t dim() const noexcept { return dim_; }

    cplx& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
    const cplx& operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * dim_ + col];
    }

    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }

    CMatrix adjoint() const;
    cplx trace() const noexcept;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s) noexcept;

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

    /// Matrix product (parallel kernel for large dimensions).
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

/// Largest entry modulus.
double max_abs(const CMatrix& m) noexcept;

/// Largest entry modulus of a - b; throws DimensionMismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// ||U^dagger U - I||_inf (entrywise).
double unitarity_defect(const CMatrix& u);

/// ||A - A^dagger||_inf (entrywise).
double hermiticity_defect(const CMatrix& a);

CMatrix matrix_power(const CMatrix& m, std::uint64_t exponent);

/// Tr(A^dagger B) without forming the product.
cplx trace_inner(const CMatrix& a, const CMatrix& b);

/// exp(2 pi i k / order) for integer k, evaluated once per exponent class so
/// phases built from exact integer exponents never drift.
class RootsOfUnity {
public:
    explicit RootsOfUnity(std::int64_t order);

    std::int64_t order() const noexcept { return order_; }

    /// omega^exponent for any integer exponent.
    cplx operator()(std::int64_t exponent) const noexcept;

private:
    std::int64_t order_;
    std::vector<cplx> table_;
};

} // namespace dps
