#include "dps/kernels.hpp"

#include "dps/error.hpp"

#include <algorithm>
#include <cmath>

namespace dps::kernels {

namespace {

// Below this dimension thread start-up costs more than the product itself.
constexpr std::size_t kParallelMatmulDim = 48;

void check_family(const PhaseFamily& family, std::span<const std::size_t> image) {
    if (image.size() != family.ops.size()) {
        throw DimensionMismatch("image map does not cover the operator family");
    }
}

// out = a * b, rows [row_begin, row_end). i-k-j order keeps the inner loop
// contiguous in both b and out.
void matmul_rows(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t row_begin,
                 std::size_t row_end) {
    const std::size_t n = a.dim();
    for (std::size_t i = row_begin; i < row_end; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
}

double point_residual(const CMatrix& u, const CMatrix& u_adj, const CMatrix& delta,
                      const CMatrix& target) {
    const CMatrix conj = serial::matmul(serial::matmul(u, delta), u_adj);
    return max_abs_diff(conj, target);
}

cplx expectation(std::span<const cplx> psi, const CMatrix& op) {
    const std::size_t n = op.dim();
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += op(i, j) * psi[j];
        acc += std::conj(psi[i]) * row;
    }
    return acc;
}

void check_state(std::span<const cplx> psi, const PhaseFamily& family) {
    if (psi.size() != family.dim()) {
        throw DimensionMismatch("state dimension does not match operator family");
    }
}

} // namespace

namespace serial {

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.dim());
    matmul_rows(a, b, out, 0, a.dim());
    return out;
}

double covariance_residual(const CMatrix& u, const PhaseFamily& family,
                           std::span<const std::size_t> image) {
    check_family(family, image);
    const CMatrix u_adj = u.adjoint();
    double r = 0.0;
    for (std::size_t p = 0; p < family.ops.size(); ++p) {
        r = std::max(r, point_residual(u, u_adj, family.ops[p], family.ops[image[p]]));
    }
    return r;
}

std::vector<cplx> expectations(std::span<const cplx> psi, const PhaseFamily& family) {
    check_state(psi, family);
    std::vector<cplx> out(family.ops.size());
    for (std::size_t p = 0; p < family.ops.size(); ++p) out[p] = expectation(psi, family.ops[p]);
    return out;
}

} // namespace serial

namespace parallel {

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    const std::size_t n = a.dim();
    CMatrix out(n);
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelMatmulDim)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const auto row = static_cast<std::size_t>(i);
        matmul_rows(a, b, out, row, row + 1);
    }
    return out;
}

double covariance_residual(const CMatrix& u, const PhaseFamily& family,
                           std::span<const std::size_t> image) {
    check_family(family, image);
    const CMatrix u_adj = u.adjoint();
    const auto count = static_cast<std::ptrdiff_t>(family.ops.size());
    double r = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : r)
    for (std::ptrdiff_t p = 0; p < count; ++p) {
        const auto q = static_cast<std::size_t>(p);
        r = std::max(r, point_residual(u, u_adj, family.ops[q], family.ops[image[q]]));
    }
    return r;
}

std::vector<cplx> expectations(std::span<const cplx> psi, const PhaseFamily& family) {
    check_state(psi, family);
    std::vector<cplx> out(family.ops.size());
    const auto count = static_cast<std::ptrdiff_t>(family.ops.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t p = 0; p < count; ++p) {
        const auto q = static_cast<std::size_t>(p);
        out[q] = expectation(psi, family.ops[q]);
    }
    return out;
}

} // namespace parallel

} // namespace dps::kernels
