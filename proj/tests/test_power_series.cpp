#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/power_series.hpp"

using namespace hlab;

namespace {

IntSeq take(const PowerSeries& f) { return f.terms(); }

}  // namespace

TEST_CASE("polynomial degree ignores trailing zeros") {
    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial({0, 0, 0}).degree() == -1);
    CHECK(Polynomial({3}).degree() == 0);
    CHECK(Polynomial({1, 0, 5, 0}).degree() == 2);
    CHECK(Polynomial::monomial(7).degree() == 7);
    CHECK(Polynomial::constant(0).degree() == -1);
}

TEST_CASE("polynomial arithmetic") {
    Polynomial a({1, 2, 3});
    Polynomial b({0, 1});

    CHECK(a + b == Polynomial({1, 3, 3}));
    CHECK(a - a == Polynomial{});
    CHECK(a * b == Polynomial({0, 1, 2, 3}));
    CHECK(a * Polynomial{} == Polynomial{});
    // (1+x)^2 = 1 + 2x + x^2
    Polynomial one_plus_x({1, 1});
    CHECK(one_plus_x * one_plus_x == Polynomial({1, 2, 1}));
    // equality tolerates trailing-zero padding
    CHECK(Polynomial({1, 2, 0}) == Polynomial({1, 2}));
}

TEST_CASE("series construction and order bookkeeping") {
    PowerSeries z(4);
    CHECK(z.order() == 4);
    CHECK(z.is_zero());
    CHECK(z.coeffs().size() == 5);

    PowerSeries one = PowerSeries::one(3);
    CHECK(take(one) == seq_of({1, 0, 0, 0}));

    CHECK(take(PowerSeries::monomial(2, 4)) == seq_of({0, 0, 1, 0, 0}));
    CHECK(PowerSeries::monomial(9, 4).is_zero());

    PowerSeries from_poly = PowerSeries::from_polynomial(Polynomial({1, 2, 3, 4}), 2);
    CHECK(take(from_poly) == seq_of({1, 2, 3}));

    PowerSeries s = PowerSeries::from_sequence(seq_of({5, 6, 7}));
    CHECK(s.order() == 2);
    CHECK(s.coeff(1) == 6);
}

TEST_CASE("arithmetic carries the minimum order") {
    PowerSeries f(seq_of({1, 1, 1, 1, 1}), 4);
    PowerSeries g(seq_of({1, 2, 3}), 2);

    CHECK(add(f, g).order() == 2);
    CHECK(take(add(f, g)) == seq_of({2, 3, 4}));
    CHECK(take(sub(f, g)) == seq_of({0, -1, -2}));
    CHECK(take(negate(g)) == seq_of({-1, -2, -3}));
}

TEST_CASE("multiplication truncates exactly") {
    // (1+x)(1-x) = 1 - x^2
    PowerSeries p(seq_of({1, 1, 0, 0}), 3);
    PowerSeries q(seq_of({1, -1, 0, 0}), 3);
    CHECK(take(mul(p, q, 3)) == seq_of({1, 0, -1, 0}));
    CHECK(take(mul(p, q, 1)) == seq_of({1, 0}));

    // geometric squared: (sum x^k)^2 has coefficients n+1
    PowerSeries geo(seq_of({1, 1, 1, 1, 1, 1}), 5);
    CHECK(take(mul(geo, geo, 5)) == seq_of({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("inverse round-trips and needs a unit constant term") {
    PowerSeries f(seq_of({1, 3, -2, 5, 0, 7}), 5);
    PowerSeries inv = inverse(f, 5);
    CHECK(take(mul(f, inv, 5)) == seq_of({1, 0, 0, 0, 0, 0}));

    PowerSeries g(seq_of({-1, 4, 4, -9}), 3);
    CHECK(take(mul(g, inverse(g, 3), 3)) == seq_of({1, 0, 0, 0}));

    // 1/(1-x) = geometric series
    PowerSeries one_minus_x(seq_of({1, -1, 0, 0, 0}), 4);
    CHECK(take(inverse(one_minus_x, 4)) == seq_of({1, 1, 1, 1, 1}));

    CHECK_THROWS_AS(inverse(PowerSeries(seq_of({2, 1}), 1), 1), NonUnitConstantTerm);
    CHECK_THROWS_AS(inverse(PowerSeries::zero(3), 3), NonUnitConstantTerm);
}

TEST_CASE("substitute_monomial spreads and clamps") {
    PowerSeries f(seq_of({1, 2, 3}), 2);
    // f mod x^3 determines f(x^2) only mod x^6, so the order clamps to 5
    PowerSeries spread = substitute_monomial(f, 2, 6);
    CHECK(spread.order() == 5);
    CHECK(take(spread) == seq_of({1, 0, 2, 0, 3, 0}));
    CHECK(take(substitute_monomial(f, 2, 3)) == seq_of({1, 0, 2, 0}));
    CHECK(take(substitute_monomial(f, 1, 2)) == seq_of({1, 2, 3}));
    // m large enough that only the constant survives
    CHECK(take(substitute_monomial(f, 5, 4)) == seq_of({1, 0, 0, 0, 0}));
}

TEST_CASE("rational expansion") {
    // x/(1-x-x^2): Fibonacci 0,1,1,2,3,5,...
    Polynomial num({0, 1});
    Polynomial den({1, -1, -1});
    CHECK(take(rational(num, den, 9)) == seq_of({0, 1, 1, 2, 3, 5, 8, 13, 21, 34}));

    // 1/(1-x)^2 = n+1
    CHECK(take(rational(Polynomial({1}), Polynomial({1, -2, 1}), 5)) ==
          seq_of({1, 2, 3, 4, 5, 6}));

    CHECK_THROWS_AS(rational(Polynomial({1}), Polynomial({0, 1}), 3), NonUnitConstantTerm);
}

TEST_CASE("truncated lowers the order") {
    PowerSeries f(seq_of({4, 5, 6, 7}), 3);
    PowerSeries t = f.truncated(1);
    CHECK(t.order() == 1);
    CHECK(take(t) == seq_of({4, 5}));
    CHECK(f.truncated(3) == f);
}

TEST_CASE("fixed_point solves the Catalan equation") {
    // u = 1 + x u^2 has the Catalan g.f. as its unique unit solution.
    SeriesExpr u = SeriesExpr::unknown();
    SeriesExpr phi = SeriesExpr::constant(1) + SeriesExpr::x() * u * u;
    PowerSeries c = fixed_point(phi, 9);
    CHECK(take(c) == seq_of({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}));

    // the solution satisfies the equation exactly mod x^10
    CHECK(phi.evaluate(c, 9) == c);
}

TEST_CASE("fixed_point handles substituted arguments") {
    // u(x) = 1 + x u(x^2) u(x): every monotone path count style recursion
    // converges because the unknown is multiplied by x.
    SeriesExpr u = SeriesExpr::unknown();
    SeriesExpr phi = SeriesExpr::constant(1) +
                     SeriesExpr::x() * SeriesExpr::substitute(u, 2) * u;
    PowerSeries s = fixed_point(phi, 8);
    CHECK(phi.evaluate(s, 8) == s);
    CHECK(s.coeff(0) == 1);
}

TEST_CASE("fixed_point rejects non-contractions") {
    // u = u + 1 never stabilizes.
    SeriesExpr phi = SeriesExpr::unknown() + SeriesExpr::constant(1);
    CHECK_THROWS_AS(fixed_point(phi, 5), NoConvergence);
}

TEST_CASE("expression inverse matches series inverse") {
    SeriesExpr e = SeriesExpr::inverse(SeriesExpr::constant(Polynomial({1, -1})));
    PowerSeries got = e.evaluate(PowerSeries::one(6), 6);
    CHECK(take(got) == seq_of({1, 1, 1, 1, 1, 1, 1}));
}
