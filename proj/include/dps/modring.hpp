#pragma once

/*
 * Residue-ring arithmetic over Z_M and the quotient chain of the Euclidean
 * algorithm.
 *
 * Residues are always stored in canonical form {0, ..., M-1}. The symmetric
 * representative range {-(M-1)/2, ..., (M-1)/2} (odd M) is a display view
 * only, see Residue::symmetric().
 */

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace dps {

/// Reduce an arbitrary integer into {0, ..., modulus-1}.
constexpr std::int64_t reduce(std::int64_t value, std::int64_t modulus) noexcept {
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

class Residue {
public:
    /// Throws InvalidArgument when modulus < 2.
    Residue(std::int64_t value, std::int64_t modulus);

    std::int64_t value() const noexcept { return value_; }
    std::int64_t modulus() const noexcept { return modulus_; }

    /// Representative in the symmetric range. For even moduli the range is
    /// {-(M/2 - 1), ..., M/2}.
    std::int64_t symmetric() const noexcept;

    bool is_unit() const noexcept;

    Residue operator-() const { return {-value_, modulus_}; }
    Residue& operator+=(const Residue& o);
    Residue& operator-=(const Residue& o);
    Residue& operator*=(const Residue& o);

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

    friend bool operator==(const Residue&, const Residue&) = default;

    /// Non-negative power by repeated squaring.
    Residue pow(std::uint64_t exponent) const;

private:
    void check_same(const Residue& o) const;

    std::int64_t value_;
    std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

/// Multiplicative inverse. Throws NonInvertible when gcd(value, modulus) != 1.
Residue mod_inverse(const Residue& a);

/// Remainders r0 >= r1 > r2 > ... > r_l = 0 and the quotients with
/// r_i = k_i r_{i+1} + r_{i+2}.
struct EuclidTrace {
    std::vector<std::int64_t> remainders;
    std::vector<std::int64_t> quotients;

    /// Rebuild r0 and r1 from the last two remainders and the quotient chain.
    std::pair<std::int64_t, std::int64_t> reconstruct() const;
};

/// Euclid on two non-negative integer representatives. When b == d the trace
/// stops after a single quotient. Throws BothZero for (0, 0).
EuclidTrace euclid_trace(std::int64_t b, std::int64_t d);

} // namespace dps
