#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <utility>
#include <vector>

#include "hankel_lab/bigint.hpp"

namespace hlab {

// Dense integer polynomial. Trailing zeros are tolerated; degree() reports the
// index of the last nonzero coefficient (-1 for the zero polynomial).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}
    Polynomial(std::initializer_list<long long> coeffs);

    static Polynomial constant(Int c);
    static Polynomial monomial(std::size_t degree, Int c = 1);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
    long long degree() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& o) const;

private:
    std::vector<Int> coeffs_;
};

// Truncated formal power series over Z: coefficients of x^0..x^order, i.e. the
// series is known mod x^{order+1}. The order is always explicit; arithmetic
// carries the minimum of the operand orders unless an order is requested.
class PowerSeries {
public:
    // Zero series of the given order.
    explicit PowerSeries(int order);
    PowerSeries(std::vector<Int> coeffs, int order);

    static PowerSeries zero(int order) { return PowerSeries(order); }
    static PowerSeries one(int order);
    // x^degree mod x^{order+1} (the zero series when degree > order).
    static PowerSeries monomial(std::size_t degree, int order);
    static PowerSeries from_polynomial(const Polynomial& p, int order);
    static PowerSeries from_sequence(const IntSeq& terms);  // order = len-1

    int order() const { return order_; }
    const Int& coeff(std::size_t k) const { return coeffs_[k]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    IntSeq terms() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const PowerSeries& o) const;  // same order and coefficients

    PowerSeries truncated(int order) const;  // order <= this->order()

private:
    std::vector<Int> coeffs_;  // size order_+1
    int order_ = 0;
};

PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries sub(const PowerSeries& f, const PowerSeries& g);
PowerSeries negate(const PowerSeries& f);

// Cauchy product truncated mod x^{N+1}.
PowerSeries mul(const PowerSeries& f, const PowerSeries& g, int order);

// Multiplicative inverse mod x^{N+1}; requires |f(0)| = 1 so the inverse stays
// integral. Throws NonUnitConstantTerm otherwise.
PowerSeries inverse(const PowerSeries& f, int order);

// f(x^m) mod x^{N+1}, m >= 1.
PowerSeries substitute_monomial(const PowerSeries& f, std::size_t m, int order);

// Expansion of num/den mod x^{N+1}; requires |den(0)| = 1.
PowerSeries rational(const Polynomial& num, const Polynomial& den, int order);

// Expression tree over {polynomial constants, +, -, *, unit-inverse,
// substitute-monomial, the unknown u}; the shape accepted by fixed_point.
class SeriesExpr {
public:
    static SeriesExpr constant(Polynomial p);
    static SeriesExpr constant(long long c) { return constant(Polynomial::constant(Int(c))); }
    static SeriesExpr x() { return constant(Polynomial::monomial(1)); }
    static SeriesExpr unknown();
    static SeriesExpr inverse(SeriesExpr e);
    static SeriesExpr substitute(SeriesExpr e, std::size_t m);

    friend SeriesExpr operator+(SeriesExpr a, SeriesExpr b);
    friend SeriesExpr operator-(SeriesExpr a, SeriesExpr b);
    friend SeriesExpr operator*(SeriesExpr a, SeriesExpr b);

    PowerSeries evaluate(const PowerSeries& u, int order) const;

    struct Node;  // implementation detail, defined in the .cpp

private:
    explicit SeriesExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Solves u = phi(u) mod x^{N+1} by iterating from u_0 = 1. Requires phi to be
// a valuation contraction; the returned series satisfies phi(r) == r mod
// x^{N+1} exactly (this is the stability test that ends the iteration).
// Throws NoConvergence if the iterate is not stable after N+1 steps.
PowerSeries fixed_point(const SeriesExpr& phi, int order);

}  // namespace hlab
