#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "hankel_lab/catalog.hpp"
#include "hankel_lab/contfrac.hpp"
#include "hankel_lab/errors.hpp"
#include "hankel_lab/power_series.hpp"

using namespace hlab;

TEST_CASE("power_list validates on access") {
    PowerFn p = power_list({1, 2, 3});
    CHECK(p(0) == 1);
    CHECK(p(2) == 3);
    CHECK_THROWS_AS(p(3), InsufficientPowers);

    PowerFn bad = power_list({1, 0, 2});
    CHECK(bad(0) == 1);
    CHECK_THROWS_AS(bad(1), InvalidPower);
}

TEST_CASE("required_depth scans partial sums with strict inequality") {
    PowerFn ones = [](std::size_t) { return std::int64_t{1}; };
    CHECK(required_depth(ones, 5) == 6);
    CHECK(required_depth(ones, 0) == 1);

    PowerFn ex1 = power_list({1, 1, 3, 4, 8, 16});
    CHECK(required_depth(ex1, 14) == 5);  // 1+1+3+4+8 = 17 > 14

    PowerFn gap = power_list({1, 3, 4, 2, 2});
    CHECK(required_depth(gap, 3) == 2);  // 1+3 = 4 > 3
    CHECK(required_depth(gap, 4) == 3);  // partial sum must exceed, not reach
}

TEST_CASE("cf_expand all-ones all-minus gives Catalan") {
    CfSpec spec = CfSpec::from_rule([](std::size_t) { return std::int64_t{1}; });
    CHECK(cf_expand(spec, 5) == seq_of({1, 1, 2, 5, 14, 42}));

    // closed-form cross-check: c = 1 + x c^2 to a deeper order
    SeriesExpr u = SeriesExpr::unknown();
    PowerSeries c = fixed_point(SeriesExpr::constant(1) + SeriesExpr::x() * u * u, 20);
    CHECK(cf_expand(spec, 20) == c.terms());
}

TEST_CASE("cf_expand frozen reference prefixes") {
    CfSpec a(CfSpec::from_powers({1, 1, 3, 4, 8, 16}));
    CHECK(cf_expand(a, 14) ==
          seq_of({1, 1, 2, 4, 8, 17, 36, 76, 161, 342, 726, 1541, 3272, 6948, 14753}));

    CfSpec b(CfSpec::from_powers({1, 1, 1, 2, 4, 8}));
    CHECK(cf_expand(b, 16) ==
          seq_of({1, 1, 2, 5, 13, 35, 95, 259, 707, 1932, 5281, 14438, 39475, 107933,
                  295115, 806922, 2206342}));

    CfSpec c = CfSpec::from_rule(
        [](std::size_t k) { return std::int64_t{k < 2 ? 1 : 2}; });
    CHECK(cf_expand(c, 11) == seq_of({1, 1, 2, 4, 9, 20, 46, 105, 243, 560, 1299, 3006}));
}

TEST_CASE("cf_expand pentagonal powers with the minus-minus-plus-plus cycle") {
    CfSpec spec = Catalog::instance().cf_spec("pentagonal_cf_powers");
    spec.sign_cycle = {-1, -1, 1, 1};
    CHECK(cf_expand(spec, 16) ==
          seq_of({1, 1, 2, 4, 7, 12, 21, 37, 65, 115, 204, 361, 638, 1128, 1994, 3524,
                  6230}));
}

TEST_CASE("all-plus signs flip coefficient signs where expected") {
    CfSpec spec = CfSpec::from_rule([](std::size_t) { return std::int64_t{1}; },
                                    std::vector<int>{1});
    CHECK(cf_expand(spec, 8) == seq_of({1, -1, 2, -5, 14, -42, 132, -429, 1430}));
}

TEST_CASE("finite power lists fail when the depth outruns them") {
    CfSpec spec = CfSpec::from_powers({1, 1, 1});
    CHECK_NOTHROW(cf_expand(spec, 2));
    CHECK_THROWS_AS(cf_expand(spec, 10), InsufficientPowers);
}

TEST_CASE("invalid powers are rejected") {
    CfSpec spec = CfSpec::from_rule(
        [](std::size_t k) { return std::int64_t{k == 2 ? 0 : 1}; });
    CHECK_THROWS_AS(cf_expand(spec, 6), InvalidPower);
}

TEST_CASE("depth stability on random specs") {
    std::mt19937_64 rng(20240814);
    std::uniform_int_distribution<std::int64_t> pk(1, 4);
    std::uniform_int_distribution<int> ord(0, 24);
    std::uniform_int_distribution<int> coin(0, 1);

    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::int64_t> p(30);
        for (auto& v : p) v = pk(rng);
        std::vector<int> signs(30);
        for (auto& s : signs) s = coin(rng) ? 1 : -1;
        CfSpec spec = CfSpec::from_powers(p, signs);

        const int N = ord(rng);
        const std::size_t L = required_depth(spec.powers, N);
        REQUIRE(L + 2 <= p.size());
        IntSeq at_l = cf_expand_with_depth(spec, N, L);
        CHECK(at_l == cf_expand_with_depth(spec, N, L + 1));
        CHECK(at_l == cf_expand_with_depth(spec, N, L + 2));
        CHECK(at_l == cf_expand(spec, N));
        CHECK(at_l[0] == 1);
    }
}

TEST_CASE("depth stability on every catalog cf entry") {
    const auto& cat = Catalog::instance();
    for (const auto& e : cat.entries()) {
        if (!e.has_cf) continue;
        CfSpec spec = cat.cf_spec(e.name);
        const int N = 18;
        const std::size_t L = required_depth(spec.powers, N);
        IntSeq base = cf_expand_with_depth(spec, N, L);
        CHECK_MESSAGE(base == cf_expand_with_depth(spec, N, L + 2), e.name);
    }
}

TEST_CASE("all-minus specs expand to strictly positive terms") {
    const auto& cat = Catalog::instance();
    for (const auto& e : cat.entries()) {
        if (!e.has_cf) continue;
        IntSeq a = cf_expand(cat.cf_spec(e.name), 24);
        for (std::size_t n = 0; n < a.size(); ++n) {
            CHECK_MESSAGE(a[n] > 0, e.name, " term ", n);
        }
    }
}

TEST_CASE("signs at or beyond the required depth cannot matter") {
    std::mt19937_64 rng(777001);
    std::uniform_int_distribution<std::int64_t> pk(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);

    for (int iter = 0; iter < 100; ++iter) {
        std::vector<std::int64_t> p(26);
        for (auto& v : p) v = pk(rng);
        const int N = 20;
        const std::size_t L = required_depth(power_list(p), N);
        REQUIRE(L + 3 <= p.size());

        std::vector<int> signs(L + 3, 0);
        for (auto& s : signs) s = coin(rng) ? 1 : -1;
        std::vector<int> flipped = signs;
        for (std::size_t k = L; k < flipped.size(); ++k) flipped[k] = -flipped[k];

        IntSeq base = cf_expand_with_depth(CfSpec::from_powers(p, signs), N, L + 3);
        IntSeq other = cf_expand_with_depth(CfSpec::from_powers(p, flipped), N, L + 3);
        CHECK(base == other);
    }
}

TEST_CASE("sign cycles repeat and the empty cycle means all minus") {
    CfSpec spec = CfSpec::from_powers({1, 1, 1, 1}, {-1, 1});
    CHECK(spec.sign(0) == -1);
    CHECK(spec.sign(1) == 1);
    CHECK(spec.sign(2) == -1);
    CHECK(spec.sign(5) == 1);

    CfSpec dflt = CfSpec::from_powers({1, 1});
    CHECK(dflt.sign(0) == -1);
    CHECK(dflt.sign(17) == -1);
}
