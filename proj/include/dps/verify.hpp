#pragma once

#include "dps/oracle.hpp"
#include "dps/qops.hpp"
#include "dps/symplectic.hpp"

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dps::verify {

enum class Suite { sw, translation, covariance, projectivity, uniqueness, all };

/// Parses "sw", "translation", ...; nullopt for unknown names.
std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s) noexcept;

struct Options {
    /// Overrides every per-check tolerance when set.
    std::optional<double> tol;
    std::uint64_t seed = 20240601;
    int projectivity_pairs = 200;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    bool pass = false;
};

/// Uniform element of Sp_M (from the enumerated group when M is small,
/// otherwise a random generator word).
SympMat random_element(std::int64_t modulus, std::mt19937_64& rng);

/// max_{m,n} || W_{m,n} Delta_{0,0} W_{m,n}^dagger - Delta_{m,n} || (odd N).
double translation_residual(std::int64_t dim);

/// Runs the requested suite. Throws ParityError for the translation suite
/// on even lattices; `all` skips it there.
Report run(Suite suite, const Lattice& lattice, const Options& options = {});

} // namespace dps::verify
