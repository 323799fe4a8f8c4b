#include "dps/verify.hpp"

#include "dps/error.hpp"
#include "dps/metaplectic.hpp"

#include <algorithm>
#include <cmath>

namespace dps::verify {

namespace {

constexpr double kSwTol = 1e-12;
constexpr double kGroupTol = 1e-9;
constexpr double kPhaseTol = 1e-9;

double pick(const Options& o, double fallback) { return o.tol.value_or(fallback); }

Check make_check(std::string name, double residual, double tol) {
    return {std::move(name), residual, residual < tol, true};
}

std::vector<SympMat> sample_group(std::int64_t modulus, std::mt19937_64& rng) {
    if (modulus <= kDefaultEnumerationBound) return enumerate_group(modulus);
    std::vector<SympMat> out;
    for (int i = 0; i < 64; ++i) out.push_back(random_element(modulus, rng));
    return out;
}

void run_sw(const Lattice& lattice, const Options& o, std::vector<Check>& out) {
    for (auto& c : verify_sw_kernel(lattice, pick(o, kSwTol))) out.push_back(std::move(c));
}

void run_translation(const Lattice& lattice, const Options& o, std::vector<Check>& out) {
    if (lattice.parity() != Parity::odd) {
        throw ParityError("translation covariance is only available on odd lattices");
    }
    out.push_back(make_check("translation_weyl", translation_residual(lattice.dim()), pick(o, kSwTol)));
}

void run_covariance(const Lattice& lattice, const Options& o, std::vector<Check>& out) {
    const auto dim = lattice.dim();
    const auto mod = lattice.modulus();
    const PhaseFamily family = delta_family(lattice);
    const double gen_tol = pick(o, covariance_tolerance(dim));

    out.push_back(make_check("covariance_h+",
                             covariance_residual(u_hplus(dim, lattice.parity()).matrix(),
                                                 generator(Gen::plus, mod), family),
                             gen_tol));
    out.push_back(make_check("covariance_h-",
                             covariance_residual(u_hminus(dim, lattice.parity()).matrix(),
                                                 generator(Gen::minus, mod), family),
                             gen_tol));
    out.push_back(make_check(
        "covariance_ht",
        covariance_residual(u_ht(dim, lattice.parity()).matrix(), h_t(mod), family), gen_tol));

    std::mt19937_64 rng(o.seed);
    double worst = 0.0;
    for (const auto& s : sample_group(mod, rng)) {
        worst = std::max(worst, covariance_residual(u_of(s, lattice).matrix(), s, family));
    }
    out.push_back(make_check("covariance_group", worst, pick(o, kGroupTol)));
}

void run_projectivity(const Lattice& lattice, const Options& o, std::vector<Check>& out) {
    const auto mod = lattice.modulus();
    std::mt19937_64 rng(o.seed);
    double worst = 0.0;
    for (int i = 0; i < o.projectivity_pairs; ++i) {
        const SympMat s = random_element(mod, rng);
        const SympMat t = random_element(mod, rng);
        const CMatrix lhs = u_of(s * t, lattice).matrix();
        const CMatrix rhs = u_of(s, lattice).matrix() * u_of(t, lattice).matrix();
        worst = std::max(worst, equal_up_to_phase(lhs, rhs, pick(o, kGroupTol)).residual);
    }
    out.push_back(make_check("projectivity_pairs", worst, pick(o, kGroupTol)));

    // h^M = I in Sp_M, so U(h)^M must be a multiple of the identity.
    double order = 0.0;
    for (const auto& u : {u_hplus(lattice.dim(), lattice.parity()), u_hminus(lattice.dim(), lattice.parity())}) {
        const CMatrix p = matrix_power(u.matrix(), static_cast<std::uint64_t>(mod));
        order = std::max(order, equal_up_to_phase(p, CMatrix::identity(p.dim()), kPhaseTol).residual);
    }
    out.push_back(make_check("projectivity_order", order, pick(o, kGroupTol)));
}

void run_uniqueness(const Lattice& lattice, const Options& o, std::vector<Check>& out) {
    const auto mod = lattice.modulus();
    std::mt19937_64 rng(o.seed);
    const std::vector<std::pair<std::string, SympMat>> cases{
        {"h+", generator(Gen::plus, mod)},
        {"h-", generator(Gen::minus, mod)},
        {"ht", h_t(mod)},
        {"identity", SympMat::identity(mod)},
        {"random", random_element(mod, rng)},
    };
    for (const auto& [name, s] : cases) {
        const auto r = verify_uniqueness(s, lattice, pick(o, kPhaseTol));
        const double nullity_defect = std::abs(static_cast<double>(r.nullity) - 1.0);
        out.push_back(make_check("uniqueness_nullity_" + name, nullity_defect, 0.5));
        const double phase_res = r.phase ? r.phase_residual : 1.0;
        out.push_back(make_check("uniqueness_phase_" + name, phase_res, pick(o, kPhaseTol)));
    }
}

} // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : {Suite::sw, Suite::translation, Suite::covariance, Suite::projectivity,
                    Suite::uniqueness, Suite::all}) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

std::string_view to_string(Suite s) noexcept {
    switch (s) {
    case Suite::sw: return "sw";
    case Suite::translation: return "translation";
    case Suite::covariance: return "covariance";
    case Suite::projectivity: return "projectivity";
    case Suite::uniqueness: return "uniqueness";
    case Suite::all: return "all";
    }
    return "unknown";
}

SympMat random_element(std::int64_t modulus, std::mt19937_64& rng) {
    if (modulus <= kDefaultEnumerationBound) {
        // Rejection sampling over Z_M^4 is uniform on Sp_M.
        std::uniform_int_distribution<std::int64_t> entry(0, modulus - 1);
        for (;;) {
            const auto a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
            if (SympMat::is_symplectic(a, b, c, d, modulus)) return {a, b, c, d, modulus};
        }
    }
    std::uniform_int_distribution<std::int64_t> exp(1, modulus - 1);
    GenWord w(modulus);
    for (int i = 0; i < 8; ++i) w.append(i % 2 == 0 ? Gen::plus : Gen::minus, exp(rng));
    return evaluate(w);
}

double translation_residual(std::int64_t dim) {
    const CMatrix d00 = delta_cohendet(dim, 0, 0);
    double r = 0.0;
    for (std::int64_t m = 0; m < dim; ++m)
        for (std::int64_t n = 0; n < dim; ++n) {
            const CMatrix w = weyl_symmetric(dim, m, n);
            r = std::max(r, max_abs_diff(w * d00 * w.adjoint(), delta_cohendet(dim, m, n)));
        }
    return r;
}

Report run(Suite suite, const Lattice& lattice, const Options& options) {
    Report r;
    r.suite = std::string(to_string(suite));
    const bool all = suite == Suite::all;
    if (all || suite == Suite::sw) run_sw(lattice, options, r.checks);
    if (suite == Suite::translation || (all && lattice.parity() == Parity::odd)) {
        run_translation(lattice, options, r.checks);
    }
    if (all || suite == Suite::covariance) run_covariance(lattice, options, r.checks);
    if (all || suite == Suite::projectivity) run_projectivity(lattice, options, r.checks);
    if (all || suite == Suite::uniqueness) run_uniqueness(lattice, options, r.checks);
    r.pass = all_pass(r.checks);
    return r;
}

} // namespace dps::verify
