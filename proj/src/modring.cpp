#include "dps/modring.hpp"

#include "dps/error.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <tuple>

namespace dps {

namespace {

// Moduli are capped at 2^31 so products of canonical values fit in 64 bits.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) { return (a * b) % m; }

} // namespace

Residue::Residue(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 2 || modulus > kMaxModulus) {
        throw InvalidArgument("residue modulus must lie in [2, 2^31], got " + std::to_string(modulus));
    }
    value_ = reduce(value, modulus);
}

std::int64_t Residue::symmetric() const noexcept {
    return value_ > modulus_ / 2 ? value_ - modulus_ : value_;
}

bool Residue::is_unit() const noexcept { return gcd(value_, modulus_) == 1; }

void Residue::check_same(const Residue& o) const {
    if (o.modulus_ != modulus_) {
        throw ModulusMismatch("residue moduli differ: " + std::to_string(modulus_) + " vs " +
                              std::to_string(o.modulus_));
    }
}

Residue& Residue::operator+=(const Residue& o) {
    check_same(o);
    value_ = reduce(value_ + o.value_, modulus_);
    return *this;
}

Residue& Residue::operator-=(const Residue& o) {
    check_same(o);
    value_ = reduce(value_ - o.value_, modulus_);
    return *this;
}

Residue& Residue::operator*=(const Residue& o) {
    check_same(o);
    value_ = mulmod(value_, o.value_, modulus_);
    return *this;
}

Residue Residue::pow(std::uint64_t exponent) const {
    Residue result(1, modulus_);
    Residue base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value() << " (mod " << r.modulus() << ")";
}

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Residue mod_inverse(const Residue& a) {
    // Extended Euclid tracking only the coefficient of a.
    std::int64_t old_r = a.value(), r = a.modulus();
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1) {
        throw NonInvertible(std::to_string(a.value()) + " is not a unit modulo " +
                            std::to_string(a.modulus()));
    }
    return {old_s, a.modulus()};
}

std::pair<std::int64_t, std::int64_t> EuclidTrace::reconstruct() const {
    const auto l = remainders.size();
    if (l < 2) return {remainders.empty() ? 0 : remainders[0], 0};
    std::int64_t next = remainders[l - 1];
    std::int64_t cur = remainders[l - 2];
    for (std::size_t i = quotients.size(); i-- > 0;) {
        std::int64_t prev = quotients[i] * cur + next;
        next = cur;
        cur = prev;
    }
    return {cur, next};
}

EuclidTrace euclid_trace(std::int64_t b, std::int64_t d) {
    if (b < 0 || d < 0) throw InvalidArgument("euclid_trace expects non-negative representatives");
    if (b == 0 && d == 0) throw BothZero("euclid_trace: both inputs are zero");

    EuclidTrace t;
    t.remainders = {std::max(b, d), std::min(b, d)};
    while (t.remainders.back() != 0) {
        const auto n = t.remainders.size();
        const std::int64_t hi = t.remainders[n - 2];
        const std::int64_t lo = t.remainders[n - 1];
        t.quotients.push_back(hi / lo);
        t.remainders.push_back(hi % lo);
    }
    return t;
}

} // namespace dps
