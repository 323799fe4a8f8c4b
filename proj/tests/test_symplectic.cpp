#include "dps/error.hpp"
#include "dps/oracle.hpp"
#include "dps/symplectic.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace dps;

namespace {

// Count of determinant-1 matrices by plain integer brute force.
std::int64_t brute_count(std::int64_t m) {
    std::int64_t count = 0;
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b)
            for (std::int64_t c = 0; c < m; ++c)
                for (std::int64_t d = 0; d < m; ++d)
                    if ((((a * d - b * c) % m) + m) % m == 1 % m) ++count;
    return count;
}

SympMat random_symp(std::int64_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> e(0, m - 1);
    for (;;) {
        const auto a = e(rng), b = e(rng), c = e(rng), d = e(rng);
        if (SympMat::is_symplectic(a, b, c, d, m)) return {a, b, c, d, m};
    }
}

GenWord random_word(std::int64_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<std::int64_t> exp(-3 * m, 3 * m);
    std::bernoulli_distribution coin;
    GenWord w(m);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.append(coin(rng) ? Gen::plus : Gen::minus, exp(rng));
    return w;
}

} // namespace

TEST_CASE("generators") {
    CHECK(generator(Gen::plus, 7).entries() == std::array<std::int64_t, 4>{1, 1, 0, 1});
    CHECK(generator(Gen::minus, 7).entries() == std::array<std::int64_t, 4>{1, 0, 1, 1});
    for (std::int64_t m = 2; m <= 15; ++m) {
        for (Gen g : {Gen::plus, Gen::minus}) {
            const SympMat h = generator(g, m);
            CHECK(power(h, static_cast<std::uint64_t>(m)) == SympMat::identity(m));
            for (std::int64_t k = 1; k < m; ++k) {
                CHECK(power(h, static_cast<std::uint64_t>(k)) != SympMat::identity(m));
            }
        }
    }
}

TEST_CASE("h_t and its generator word") {
    CHECK(h_t(5).entries() == std::array<std::int64_t, 4>{0, 1, 4, 0});
    const GenWord w(5, {{Gen::plus, 1}, {Gen::minus, -1}, {Gen::plus, 1}});
    CHECK(evaluate(w) == h_t(5));
    for (std::int64_t m = 2; m <= 12; ++m) {
        const GenWord wm(m, {{Gen::plus, 1}, {Gen::minus, m - 1}, {Gen::plus, 1}});
        CHECK(evaluate(wm) == h_t(m));
        // h_t^2 = -I computed entrywise.
        CHECK((h_t(m) * h_t(m)).entries() == std::array<std::int64_t, 4>{m - 1, 0, 0, m - 1});
    }
}

TEST_CASE("SympMat validation and group law") {
    CHECK_THROWS_AS(SympMat(1, 1, 1, 1, 7), InvalidArgument);
    CHECK_THROWS_AS(generator(Gen::plus, 5) * generator(Gen::plus, 7), ModulusMismatch);
    const SympMat s(2, 1, 1, 1, 5);
    CHECK(s * SympMat::identity(5) == s);
    CHECK(s * s.inverse() == SympMat::identity(5));
}

TEST_CASE("row and column operations by generator powers") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const std::int64_t m = 2 + trial % 14;
        const SympMat s = random_symp(m, rng);
        const auto [a, b, c, d] = s.entries();
        const std::int64_t n = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
        const auto hp = power(generator(Gen::plus, m), static_cast<std::uint64_t>(n));
        const auto hm = power(generator(Gen::minus, m), static_cast<std::uint64_t>(n));
        auto r = [m](std::int64_t v) { return reduce(v, m); };
        using E = std::array<std::int64_t, 4>;
        CHECK((hp * s).entries() == E{r(a + n * c), r(b + n * d), c, d});
        CHECK((s * hp).entries() == E{a, r(n * a + b), c, r(n * c + d)});
        CHECK((hm * s).entries() == E{a, b, r(n * a + c), r(n * b + d)});
        CHECK((s * hm).entries() == E{r(a + n * b), b, r(c + n * d), d});
        CHECK((h_t(m) * s).entries() == E{c, d, r(-a), r(-b)});
        CHECK((s * h_t(m)).entries() == E{r(-b), a, r(-d), c});
    }
}

TEST_CASE("GenWord canonicalisation") {
    GenWord w(7);
    w.append(Gen::plus, 3).append(Gen::plus, 4);  // h+^7 = I
    CHECK(w.empty());
    w.append(Gen::minus, -1);
    CHECK(w.factors() == std::vector<GenPower>{{Gen::minus, 6}});
    w.append(Gen::plus, 14);
    CHECK(w.size() == 1);
    const GenWord x(7, {{Gen::plus, 2}, {Gen::minus, 3}});
    CHECK(evaluate(x) * evaluate(x.inverse()) == SympMat::identity(7));
}

TEST_CASE("enumerate_group sizes") {
    CHECK(brute_count(2) == 6);
    CHECK(brute_count(3) == 24);
    CHECK(enumerate_group(2).size() == 6);
    CHECK(enumerate_group(3).size() == 24);
    CHECK(enumerate_group(7).size() == 336);
    for (std::int64_t m = 2; m <= 12; ++m) {
        const auto g = enumerate_group(m);
        CHECK(static_cast<std::int64_t>(g.size()) == brute_count(m));
        CHECK(static_cast<std::int64_t>(g.size()) == group_order(m));
        std::set<std::uint64_t> keys;
        for (const auto& s : g) keys.insert(s.key());
        CHECK(keys.size() == g.size());
    }
    CHECK_THROWS_AS(enumerate_group(13), BoundExceeded);
    CHECK(enumerate_group(13, 13).size() == 2184);
}

TEST_CASE("decompose examples") {
    CHECK(decompose(SympMat::identity(7)).empty());
    CHECK(decompose(h_t(7)).factors() ==
          std::vector<GenPower>{{Gen::plus, 1}, {Gen::minus, 6}, {Gen::plus, 1}});
    const SympMat s(2, 1, 1, 1, 5);
    const GenWord w = decompose(s);
    CHECK(evaluate(w) == s);
    CHECK(evaluate(bfs_decompose(s, 16)) == s);
}

TEST_CASE("decompose round-trips on every element, M = 2..9") {
    for (std::int64_t m = 2; m <= 9; ++m) {
        int fallbacks = 0;
        for (const auto& s : enumerate_group(m)) {
            const auto d = decompose_detailed(s);
            CHECK(evaluate(d.word) == s);
            fallbacks += d.used_fallback ? 1 : 0;
        }
        // Integer Euclid steps never wrap, so the fast path always closes.
        CHECK(fallbacks == 0);
    }
}

TEST_CASE("decompose(evaluate(w)) reproduces the matrix for random words") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::int64_t m = 2 + trial % 40;
        const GenWord w = random_word(m, rng);
        const SympMat s = evaluate(w);
        CHECK(evaluate(decompose(s)) == s);
    }
}
