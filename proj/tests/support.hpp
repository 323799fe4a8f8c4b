#pragma once

// Test-only helpers. Nothing here calls into the code paths under test
// except where noted; expected values are built from first principles.

#include "dps/cmatrix.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace dps::test {

inline cplx omega_pow(std::int64_t order, std::int64_t k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
    return std::polar(1.0, angle);
}

/// Canonical index of the p-th element of I = {-(N-1)/2, ..., (N-1)/2}.
inline std::size_t symmetric_to_canonical(std::size_t pos, std::int64_t n) {
    const std::int64_t i = static_cast<std::int64_t>(pos) - (n - 1) / 2;
    return static_cast<std::size_t>(((i % n) + n) % n);
}

/// Naive triple-loop product, independent of the library kernels.
inline CMatrix naive_mul(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < a.dim(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

inline CMatrix naive_pow(const CMatrix& a, std::int64_t e) {
    CMatrix out = CMatrix::identity(a.dim());
    for (std::int64_t i = 0; i < e; ++i) out = naive_mul(out, a);
    return out;
}

inline CMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMatrix m(n);
    for (auto& x : m.data()) x = {g(rng), g(rng)};
    return m;
}

} // namespace dps::test
