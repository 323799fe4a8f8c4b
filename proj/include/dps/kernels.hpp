#pragma once

/*
 * Data-parallel inner loops. Each kernel has a straightforward serial
 * reference and an OpenMP version; the test suite checks them against each
 * other and bench/ times them.
 */

#include "dps/cmatrix.hpp"
#include "dps/qops.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace dps::kernels {

namespace serial {

CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// max_p || U Delta_p U^dagger - Delta_{image[p]} ||_inf.
double covariance_residual(const CMatrix& u, const PhaseFamily& family,
                           std::span<const std::size_t> image);

/// <psi| Delta_p |psi> for every operator of the family.
std::vector<cplx> expectations(std::span<const cplx> psi, const PhaseFamily& family);

} // namespace serial

namespace parallel {

CMatrix matmul(const CMatrix& a, const CMatrix& b);

double covariance_residual(const CMatrix& u, const PhaseFamily& family,
                           std::span<const std::size_t> image);

std::vector<cplx> expectations(std::span<const cplx> psi, const PhaseFamily& family);

} // namespace parallel

} // namespace dps::kernels
