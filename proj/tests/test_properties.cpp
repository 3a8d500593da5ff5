#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "hankel_lab/analysis.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/verify.hpp"

using namespace hlab;

TEST_CASE("pattern map round trips on random sequences") {
    std::string detail;
    bool ok = roundtrip_suite(detail);
    CHECK_MESSAGE(ok, detail);
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    std::string detail;
    bool ok = determinant_suite(detail);
    CHECK_MESSAGE(ok, detail);
}

TEST_CASE("binomial and gf transforms preserve Hankel transforms") {
    std::string detail;
    bool ok = invariance_suite(detail);
    CHECK_MESSAGE(ok, detail);
}

TEST_CASE("expansions are stable under extra truncation depth") {
    std::string detail;
    bool ok = depth_stability_suite(detail);
    CHECK_MESSAGE(ok, detail);
}

TEST_CASE("transform invariance on random unit-head sequences") {
    std::mt19937_64 rng(650421);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> rdist(-3, 3);
    for (int iter = 0; iter < 200; ++iter) {
        IntSeq a{Int(1)};
        for (int i = 0; i < 9; ++i) a.push_back(entry(rng));
        Int r = rdist(rng);
        HankelResult base = hankel_transform(a);

        CHECK(hankel_transform(binomial_transform(a, r)).values == base.values);
        CHECK(hankel_transform(gf_transform(a, r, static_cast<int>(a.size()) - 1)).values ==
              base.values);
    }
}
