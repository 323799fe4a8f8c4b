#pragma once

/*
 * Sp_M: 2x2 matrices over Z_M with determinant 1, the unit-triangular
 * generators h+ = [[1,1],[0,1]] and h- = [[1,0],[1,1]], and the reduction of
 * an arbitrary element to a word in those generators.
 *
 * The reduction runs Euclid's algorithm on the right column (b, d) of S,
 * left-multiplying by powers of h+ (top row -= q * bottom row) and h-
 * (bottom row -= q * top row) until the top-right entry vanishes. The
 * resulting lower-triangular matrix L = [[alpha, 0], [gamma, beta]] closes via
 *
 *     L = h-^(beta + beta*gamma) * h_t * h-^alpha * h+^(-beta),
 *
 * with h_t = h+ h-^(-1) h+ = [[0,1],[-1,0]].
 */

#include "dps/modring.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dps {

enum class Gen : std::uint8_t { plus, minus };

inline char to_char(Gen g) noexcept { return g == Gen::plus ? '+' : '-'; }

class SympMat {
public:
    /// Throws InvalidArgument when a*d - b*c != 1 (mod modulus).
    SympMat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t modulus);

    static SympMat identity(std::int64_t modulus);

    /// True when the four entries have determinant 1 modulo `modulus`.
    static bool is_symplectic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                              std::int64_t modulus);

    std::int64_t modulus() const noexcept { return modulus_; }
    Residue a() const { return {e_[0], modulus_}; }
    Residue b() const { return {e_[1], modulus_}; }
    Residue c() const { return {e_[2], modulus_}; }
    Residue d() const { return {e_[3], modulus_}; }

    /// Canonical entries in row-major order (a, b, c, d).
    const std::array<std::int64_t, 4>& entries() const noexcept { return e_; }

    SympMat inverse() const;

    /// Dense integer key, unique among matrices sharing a modulus.
    std::uint64_t key() const noexcept;

    friend bool operator==(const SympMat&, const SympMat&) = default;

private:
    struct Unchecked {};
    SympMat(Unchecked, std::array<std::int64_t, 4> e, std::int64_t modulus) noexcept
        : e_(e), modulus_(modulus) {}

    friend SympMat multiply(const SympMat&, const SympMat&);

    std::array<std::int64_t, 4> e_;
    std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const SympMat& s);

/// Group law; throws ModulusMismatch.
SympMat multiply(const SympMat& lhs, const SympMat& rhs);
inline SympMat operator*(const SympMat& lhs, const SympMat& rhs) { return multiply(lhs, rhs); }

SympMat power(const SympMat& s, std::uint64_t exponent);

SympMat generator(Gen sign, std::int64_t modulus);

/// [[0, 1], [M-1, 0]].
SympMat h_t(std::int64_t modulus);

struct GenPower {
    Gen gen;
    std::int64_t exp;

    friend bool operator==(const GenPower&, const GenPower&) = default;
};

/// Product of generator powers, evaluated left to right. Exponents are kept
/// in {1, ..., M-1}; zero powers vanish and adjacent powers of the same
/// generator merge.
class GenWord {
public:
    explicit GenWord(std::int64_t modulus);
    GenWord(std::int64_t modulus, const std::vector<GenPower>& factors);

    std::int64_t modulus() const noexcept { return modulus_; }
    const std::vector<GenPower>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    std::size_t size() const noexcept { return factors_.size(); }

    /// Append h_gen^exp on the right (exp may be negative).
    GenWord& append(Gen gen, std::int64_t exp);
    GenWord& append(const GenWord& other);

    /// The word of the inverse element.
    GenWord inverse() const;

    /// Sum of exponents, i.e. the length when every power is spelled out.
    std::int64_t expanded_length() const noexcept;

    friend bool operator==(const GenWord&, const GenWord&) = default;

private:
    std::int64_t modulus_;
    std::vector<GenPower> factors_;
};

std::ostream& operator<<(std::ostream& os, const GenWord& w);

SympMat evaluate(const GenWord& word);

/// The Euclid-guided reduction. Returns nullopt if the procedure does not
/// reach the lower-triangular form or its word does not evaluate back to S.
std::optional<GenWord> euclid_decompose(const SympMat& s);

struct Decomposition {
    GenWord word;
    bool used_fallback = false;
};

/// Euclid reduction with a breadth-first word search as fallback. Throws
/// DecompositionFailed only if both routes fail.
Decomposition decompose_detailed(const SympMat& s);

inline GenWord decompose(const SympMat& s) { return decompose_detailed(s).word; }

inline constexpr std::int64_t kDefaultEnumerationBound = 12;

/// Every element of Sp_M in lexicographic (a, b, c, d) order. Throws
/// BoundExceeded when modulus > bound.
std::vector<SympMat> enumerate_group(std::int64_t modulus,
                                     std::int64_t bound = kDefaultEnumerationBound);

/// |Sp_M| = M^3 * prod_{p | M} (1 - p^-2).
std::int64_t group_order(std::int64_t modulus);

} // namespace dps
