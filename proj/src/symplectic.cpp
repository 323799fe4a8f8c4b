#include "dps/symplectic.hpp"

#include "dps/error.hpp"
#include "dps/oracle.hpp"

#include <ostream>
#include <sstream>

namespace dps {

namespace {

constexpr int kDefaultBfsDepth = 64;

std::string describe(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                     std::int64_t m) {
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]] mod " << m;
    return os.str();
}

} // namespace

SympMat::SympMat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                 std::int64_t modulus)
    : modulus_(modulus) {
    if (modulus < 2) throw InvalidArgument("symplectic modulus must be >= 2");
    e_ = {reduce(a, modulus), reduce(b, modulus), reduce(c, modulus), reduce(d, modulus)};
    if (!is_symplectic(e_[0], e_[1], e_[2], e_[3], modulus)) {
        throw InvalidArgument("determinant is not 1: " + describe(a, b, c, d, modulus));
    }
}

SympMat SympMat::identity(std::int64_t modulus) { return {1, 0, 0, 1, modulus}; }

bool SympMat::is_symplectic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                            std::int64_t modulus) {
    const Residue det = Residue(a, modulus) * Residue(d, modulus) -
                        Residue(b, modulus) * Residue(c, modulus);
    return det.value() == 1 % modulus;
}

SympMat SympMat::inverse() const {
    const auto m = modulus_;
    return {Unchecked{}, {e_[3], reduce(-e_[1], m), reduce(-e_[2], m), e_[0]}, m};
}

std::uint64_t SympMat::key() const noexcept {
    const auto m = static_cast<std::uint64_t>(modulus_);
    std::uint64_t k = 0;
    for (auto v : e_) k = k * m + static_cast<std::uint64_t>(v);
    return k;
}

std::ostream& operator<<(std::ostream& os, const SympMat& s) {
    const auto& e = s.entries();
    return os << describe(e[0], e[1], e[2], e[3], s.modulus());
}

SympMat multiply(const SympMat& lhs, const SympMat& rhs) {
    if (lhs.modulus_ != rhs.modulus_) {
        throw ModulusMismatch("cannot multiply matrices over Z_" + std::to_string(lhs.modulus_) +
                              " and Z_" + std::to_string(rhs.modulus_));
    }
    const auto m = lhs.modulus_;
    const auto& x = lhs.e_;
    const auto& y = rhs.e_;
    return {SympMat::Unchecked{},
            {reduce(x[0] * y[0] + x[1] * y[2], m), reduce(x[0] * y[1] + x[1] * y[3], m),
             reduce(x[2] * y[0] + x[3] * y[2], m), reduce(x[2] * y[1] + x[3] * y[3], m)},
            m};
}

SympMat power(const SympMat& s, std::uint64_t exponent) {
    SympMat result = SympMat::identity(s.modulus());
    SympMat base = s;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        base = base * base;
        exponent >>= 1U;
    }
    return result;
}

SympMat generator(Gen sign, std::int64_t modulus) {
    return sign == Gen::plus ? SympMat(1, 1, 0, 1, modulus) : SympMat(1, 0, 1, 1, modulus);
}

SympMat h_t(std::int64_t modulus) { return {0, 1, modulus - 1, 0, modulus}; }

// GenWord ------------------------------------------------------------------

GenWord::GenWord(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw InvalidArgument("word modulus must be >= 2");
}

GenWord::GenWord(std::int64_t modulus, const std::vector<GenPower>& factors) : GenWord(modulus) {
    for (const auto& f : factors) append(f.gen, f.exp);
}

GenWord& GenWord::append(Gen gen, std::int64_t exp) {
    exp = reduce(exp, modulus_);
    if (exp == 0) return *this;
    if (!factors_.empty() && factors_.back().gen == gen) {
        factors_.back().exp = reduce(factors_.back().exp + exp, modulus_);
        if (factors_.back().exp == 0) factors_.pop_back();
    } else {
        factors_.push_back({gen, exp});
    }
    return *this;
}

GenWord& GenWord::append(const GenWord& other) {
    if (other.modulus_ != modulus_) throw ModulusMismatch("cannot concatenate words over different moduli");
    for (const auto& f : other.factors_) append(f.gen, f.exp);
    return *this;
}

GenWord GenWord::inverse() const {
    GenWord inv(modulus_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) inv.append(it->gen, -it->exp);
    return inv;
}

std::int64_t GenWord::expanded_length() const noexcept {
    std::int64_t n = 0;
    for (const auto& f : factors_) n += f.exp;
    return n;
}

std::ostream& operator<<(std::ostream& os, const GenWord& w) {
    if (w.empty()) return os << "I";
    bool first = true;
    for (const auto& f : w.factors()) {
        if (!first) os << ' ';
        os << 'h' << to_char(f.gen) << '^' << f.exp;
        first = false;
    }
    return os;
}

SympMat evaluate(const GenWord& word) {
    SympMat s = SympMat::identity(word.modulus());
    for (const auto& f : word.factors()) {
        s = s * power(generator(f.gen, word.modulus()), static_cast<std::uint64_t>(f.exp));
    }
    return s;
}

// Decomposition -------------------------------------------------------------

namespace {

GenWord ht_word(std::int64_t m) { return GenWord(m, {{Gen::plus, 1}, {Gen::minus, -1}, {Gen::plus, 1}}); }

// Word for a lower-triangular [[alpha, 0], [gamma, beta]] with alpha*beta = 1.
GenWord lower_triangular_word(std::int64_t alpha, std::int64_t gamma, std::int64_t beta,
                              std::int64_t m) {
    GenWord w(m);
    if (alpha == 1) {
        w.append(Gen::minus, gamma);
        return w;
    }
    w.append(Gen::minus, beta + beta * gamma);
    w.append(ht_word(m));
    w.append(Gen::minus, alpha);
    w.append(Gen::plus, -beta);
    return w;
}

} // namespace

std::optional<GenWord> euclid_decompose(const SympMat& s) {
    const auto m = s.modulus();
    const auto [a, b, c, d] = s.entries();
    GenWord word(m);

    if (b == 0) {
        word = lower_triangular_word(a, c, d, m);
    } else if (d == 0) {
        // S = h+^(-ab) * diag(b, 1/b) * h_t; the diagonal factor is lower triangular.
        const std::int64_t b_inv = mod_inverse(Residue(b, m)).value();
        word.append(Gen::plus, -a * b);
        word.append(lower_triangular_word(b, 0, b_inv, m));
        word.append(ht_word(m));
    } else {
        // Each Euclid step is a left factor; with steps s1, s2, ... applied in
        // order, H = ... s2 s1 and H^-1 = s1^-1 s2^-1 ... in word order.
        const EuclidTrace trace = euclid_trace(b, d);
        const bool top_first = b >= d;
        bool zero_on_top = top_first;
        SympMat hs = s;
        GenWord h_inverse(m);
        for (std::size_t i = 0; i < trace.quotients.size(); ++i) {
            const bool reduce_top = (i % 2 == 0) == top_first;
            const Gen g = reduce_top ? Gen::plus : Gen::minus;
            const std::int64_t q = trace.quotients[i];
            hs = power(generator(g, m), static_cast<std::uint64_t>(reduce(-q, m))) * hs;
            h_inverse.append(g, q);
            zero_on_top = reduce_top;
        }
        if (!zero_on_top) {
            hs = h_t(m) * hs;
            h_inverse.append(ht_word(m).inverse());
        }
        const auto& l = hs.entries();
        if (l[1] != 0) return std::nullopt;
        word = h_inverse;
        word.append(lower_triangular_word(l[0], l[2], l[3], m));
    }

    if (evaluate(word) != s) return std::nullopt;
    return word;
}

Decomposition decompose_detailed(const SympMat& s) {
    if (auto w = euclid_decompose(s)) return {std::move(*w), false};
    try {
        return {bfs_decompose(s, kDefaultBfsDepth), true};
    } catch (const DepthExceeded& e) {
        throw DecompositionFailed(std::string("euclid reduction stalled and BFS failed: ") + e.what());
    }
}

// Enumeration ---------------------------------------------------------------

std::vector<SympMat> enumerate_group(std::int64_t modulus, std::int64_t bound) {
    if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
    if (modulus > bound) {
        throw BoundExceeded("enumeration of Sp_" + std::to_string(modulus) +
                            " exceeds bound " + std::to_string(bound));
    }
    std::vector<SympMat> out;
    out.reserve(static_cast<std::size_t>(group_order(modulus)));
    for (std::int64_t a = 0; a < modulus; ++a)
        for (std::int64_t b = 0; b < modulus; ++b)
            for (std::int64_t c = 0; c < modulus; ++c)
                for (std::int64_t d = 0; d < modulus; ++d)
                    if (SympMat::is_symplectic(a, b, c, d, modulus)) out.emplace_back(a, b, c, d, modulus);
    return out;
}

std::int64_t group_order(std::int64_t modulus) {
    // M^3 * prod (1 - 1/p^2) = M^3 / prod p^2 * prod (p^2 - 1)
    std::int64_t order = modulus * modulus * modulus;
    std::int64_t n = modulus;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        order = order / (p * p) * (p * p - 1);
    }
    if (n > 1) order = order / (n * n) * (n * n - 1);
    return order;
}

} // namespace dps
