#include "dps/oracle.hpp"

#include "dps/error.hpp"
#include "dps/metaplectic.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

namespace dps {

namespace {

// Rescale a null vector so its first significant entry is real positive and
// the matrix has unit-modulus columns; report it if that makes it unitary.
std::optional<CMatrix> unitarize(CMatrix x, double tol) {
    const double scale = max_abs(x);
    if (scale == 0.0) return std::nullopt;
    for (const auto& v : x.data()) {
        if (std::abs(v) > 1e-6 * scale) {
            x *= std::conj(v) / std::abs(v);
            break;
        }
    }
    const double gram = (x.adjoint() * x).trace().real() / static_cast<double>(x.dim());
    if (gram <= 0.0) return std::nullopt;
    x *= cplx(1.0 / std::sqrt(gram));
    if (unitarity_defect(x) < tol) return x;
    return std::nullopt;
}

} // namespace

CovarianceSolution solve_covariance(std::span<const std::vector<std::size_t>> images,
                                    const PhaseFamily& family, double cutoff) {
    const std::size_t n = family.dim();
    const std::size_t points = family.ops.size();
    const auto unknowns = static_cast<Eigen::Index>(n * n);
    const auto rows = static_cast<Eigen::Index>(images.size() * points * n * n);

    // Unknown U_{ab} sits in column a*n + b. Row (p, i, j) encodes
    // sum_b U_{ib} D_{bj} - sum_a T_{ia} U_{aj} with D = Delta_p, T = Delta_{S.p}.
    Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(rows, unknowns);
    Eigen::Index row = 0;
    for (const auto& image : images) {
        if (image.size() != points) throw DimensionMismatch("image map does not cover the family");
        for (std::size_t p = 0; p < points; ++p) {
            const CMatrix& d = family.ops[p];
            const CMatrix& t = family.ops[image[p]];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j, ++row) {
                    for (std::size_t b = 0; b < n; ++b) sys(row, static_cast<Eigen::Index>(i * n + b)) += d(b, j);
                    for (std::size_t a = 0; a < n; ++a) sys(row, static_cast<Eigen::Index>(a * n + j)) -= t(i, a);
                }
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    CovarianceSolution out;
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    const double largest = sv.size() > 0 ? sv(0) : 0.0;

    // Columns of V beyond the numerical rank span the null space.
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > cutoff * largest) ++rank;
    const auto& v = svd.matrixV();
    for (Eigen::Index k = rank; k < unknowns; ++k) {
        CMatrix x(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) x(a, b) = v(static_cast<Eigen::Index>(a * n + b), k);
        out.basis.push_back(std::move(x));
    }
    out.nullity = out.basis.size();
    if (out.nullity == 1) out.unitary = unitarize(out.basis.front(), 1e-9);
    return out;
}

CovarianceSolution solve_covariance(const SympMat& s, const PhaseFamily& family, double cutoff) {
    if (s.modulus() != family.modulus) {
        throw ModulusMismatch("matrix modulus differs from the phase-point family modulus");
    }
    const std::vector<std::vector<std::size_t>> images{action_image(s)};
    return solve_covariance(images, family, cutoff);
}

GenWord bfs_decompose(const SympMat& target, int max_depth) {
    const auto m = target.modulus();
    const SympMat start = SympMat::identity(m);
    if (target == start) return GenWord(m);

    struct Parent {
        std::uint64_t from;
        GenPower step;
        int depth;
    };
    std::unordered_map<std::uint64_t, Parent> seen;
    std::unordered_map<std::uint64_t, SympMat> matrices;
    seen.emplace(start.key(), Parent{start.key(), {Gen::plus, 0}, 0});
    matrices.emplace(start.key(), start);

    // Precomputed generator powers h^e, e = 1..M-1.
    std::vector<std::pair<GenPower, SympMat>> moves;
    for (Gen g : {Gen::plus, Gen::minus})
        for (std::int64_t e = 1; e < m; ++e)
            moves.emplace_back(GenPower{g, e}, power(generator(g, m), static_cast<std::uint64_t>(e)));

    std::deque<std::uint64_t> queue{start.key()};
    while (!queue.empty()) {
        const std::uint64_t key = queue.front();
        queue.pop_front();
        const int depth = seen.at(key).depth;
        if (depth >= max_depth) continue;
        const SympMat cur = matrices.at(key);
        for (const auto& [step, mat] : moves) {
            const SympMat next = cur * mat;
            const std::uint64_t nk = next.key();
            if (seen.contains(nk)) continue;
            seen.emplace(nk, Parent{key, step, depth + 1});
            matrices.emplace(nk, next);
            if (next == target) {
                std::vector<GenPower> rev;
                for (std::uint64_t k = nk; k != start.key(); k = seen.at(k).from) rev.push_back(seen.at(k).step);
                std::reverse(rev.begin(), rev.end());
                return GenWord(m, rev);
            }
            queue.push_back(nk);
        }
    }
    throw DepthExceeded("target not reachable within depth " + std::to_string(max_depth));
}

bool all_pass(std::span<const Check> checks) noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || !c.asserted; });
}

std::vector<Check> verify_sw_kernel(const Lattice& lattice, double tol) {
    const PhaseFamily family = delta_family(lattice);
    const auto n = static_cast<double>(lattice.dim());

    double herm = 0.0, trace = 0.0, trac = 0.0;
    for (const auto& d : family.ops) {
        herm = std::max(herm, hermiticity_defect(d));
        trace = std::max(trace, std::abs(d.trace() - 1.0));
    }
    for (std::size_t p = 0; p < family.ops.size(); ++p)
        for (std::size_t q = 0; q < family.ops.size(); ++q) {
            const cplx expected = p == q ? n : 0.0;
            trac = std::max(trac, std::abs(trace_inner(family.ops[p], family.ops[q]) - expected));
        }

    std::vector<Check> out;
    out.push_back({"hermiticity", herm, herm < tol, true});
    out.push_back({"unit_trace", trace, trace < tol, true});
    const bool odd = lattice.parity() == Parity::odd;
    out.push_back({"traciality", trac, trac < tol, odd});

    if (odd) {
        // W'^dagger Delta_{m,n} W' = Delta_{m-2m', n-2n'}.
        const auto dim = lattice.dim();
        double cov = 0.0;
        for (std::int64_t mp = 0; mp < dim; ++mp)
            for (std::int64_t np = 0; np < dim; ++np) {
                const CMatrix w = weyl_cohendet(dim, mp, np);
                const CMatrix w_adj = w.adjoint();
                for (std::int64_t m = 0; m < dim; ++m)
                    for (std::int64_t k = 0; k < dim; ++k) {
                        const CMatrix lhs = w_adj * family.at(m, k) * w;
                        cov = std::max(cov, max_abs_diff(lhs, family.at(m - 2 * mp, k - 2 * np)));
                    }
            }
        out.push_back({"translation_covariance", cov, cov < tol, true});
    }
    return out;
}

UniquenessReport verify_uniqueness(const SympMat& s, const Lattice& lattice, double tol) {
    const PhaseFamily family = delta_family(lattice);
    const CovarianceSolution sol = solve_covariance(s, family);
    UniquenessReport r;
    r.nullity = sol.nullity;
    r.has_unitary = sol.unitary.has_value();
    if (sol.unitary) {
        const auto match = equal_up_to_phase(*sol.unitary, u_of(s, lattice).matrix(), tol);
        r.phase = match.phase;
        r.phase_residual = match.residual;
    }
    return r;
}

} // namespace dps
