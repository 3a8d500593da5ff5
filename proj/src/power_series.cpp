#include "hankel_lab/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "hankel_lab/errors.hpp"

namespace hlab {

std::string seq_to_string(const IntSeq& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os.str();
}

IntSeq seq_of(std::initializer_list<long long> values) {
    IntSeq r;
    r.reserve(values.size());
    for (long long v : values) r.emplace_back(v);
    return r;
}

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
}

Polynomial Polynomial::constant(Int c) { return Polynomial(std::vector<Int>{std::move(c)}); }

Polynomial Polynomial::monomial(std::size_t degree, Int c) {
    std::vector<Int> v(degree + 1, Int(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
}

long long Polynomial::degree() const {
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        if (coeffs_[i - 1] != 0) return static_cast<long long>(i - 1);
    }
    return -1;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.degree() < 0 || b.degree() < 0) return Polynomial();
    std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
}

bool Polynomial::operator==(const Polynomial& o) const {
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (coeff(i) != o.coeff(i)) return false;
    }
    return true;
}

PowerSeries::PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Int(0)), order_(order) {
    if (order < 0) throw Error("PowerSeries: negative order");
}

PowerSeries::PowerSeries(std::vector<Int> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
    if (order < 0) throw Error("PowerSeries: negative order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Int(0));
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::monomial(std::size_t degree, int order) {
    PowerSeries s(order);
    if (degree <= static_cast<std::size_t>(order)) s.coeffs_[degree] = 1;
    return s;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, int order) {
    PowerSeries s(order);
    std::size_t n = std::min(p.coeffs().size(), static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < n; ++i) s.coeffs_[i] = p.coeffs()[i];
    return s;
}

PowerSeries PowerSeries::from_sequence(const IntSeq& terms) {
    if (terms.empty()) throw Error("PowerSeries::from_sequence: empty sequence");
    return PowerSeries(terms, static_cast<int>(terms.size()) - 1);
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

bool PowerSeries::operator==(const PowerSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > order_) throw Error("PowerSeries::truncated: cannot extend a series");
    std::vector<Int> c(coeffs_.begin(), coeffs_.begin() + order + 1);
    return PowerSeries(std::move(c), order);
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
    int n = std::min(f.order(), g.order());
    std::vector<Int> r(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) r[i] = f.coeff(i) + g.coeff(i);
    return PowerSeries(std::move(r), n);
}

PowerSeries sub(const PowerSeries& f, const PowerSeries& g) {
    int n = std::min(f.order(), g.order());
    std::vector<Int> r(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) r[i] = f.coeff(i) - g.coeff(i);
    return PowerSeries(std::move(r), n);
}

PowerSeries negate(const PowerSeries& f) {
    std::vector<Int> r(f.coeffs());
    for (auto& c : r) c = -c;
    return PowerSeries(std::move(r), f.order());
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g, int order) {
    // The requested order cannot exceed what the operands determine.
    int n = std::min({order, f.order(), g.order()});
    std::vector<Int> r(static_cast<std::size_t>(n) + 1, Int(0));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
        const Int& fi = f.coeff(i);
        if (fi == 0) continue;
        for (std::size_t j = 0; i + j <= static_cast<std::size_t>(n); ++j) {
            if (g.coeff(j) == 0) continue;
            r[i + j] += fi * g.coeff(j);
        }
    }
    return PowerSeries(std::move(r), n);
}

PowerSeries inverse(const PowerSeries& f, int order) {
    const Int& a0 = f.coeff(0);
    if (a0 != 1 && a0 != -1) {
        throw NonUnitConstantTerm("inverse: constant term is " + a0.str() + ", need +-1");
    }
    int n = std::min(order, f.order());
    // b_0 = 1/a_0 = a_0; b_k = -a_0 * sum_{j=1..k} a_j b_{k-j}.
    std::vector<Int> b(static_cast<std::size_t>(n) + 1, Int(0));
    b[0] = a0;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
        Int acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (f.coeff(j) == 0) continue;
            acc += f.coeff(j) * b[k - j];
        }
        b[k] = -a0 * acc;
    }
    return PowerSeries(std::move(b), n);
}

PowerSeries substitute_monomial(const PowerSeries& f, std::size_t m, int order) {
    if (m < 1) throw Error("substitute_monomial: m must be >= 1");
    if (m == 1) return f.truncated(std::min(order, f.order()));
    // f known mod x^{d+1} determines f(x^m) mod x^{m(d+1)}.
    std::size_t known = m * (static_cast<std::size_t>(f.order()) + 1) - 1;
    int n = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(order), known));
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(f.order()); ++k) {
        std::size_t deg = k * m;
        if (deg > static_cast<std::size_t>(n)) break;
        c[deg] = f.coeff(k);
    }
    return PowerSeries(std::move(c), n);
}

PowerSeries rational(const Polynomial& num, const Polynomial& den, int order) {
    Int d0 = den.coeff(0);
    if (d0 != 1 && d0 != -1) {
        throw NonUnitConstantTerm("rational: denominator constant term is " + d0.str() +
                                  ", need +-1");
    }
    PowerSeries n = PowerSeries::from_polynomial(num, order);
    PowerSeries d = PowerSeries::from_polynomial(den, order);
    return mul(n, inverse(d, order), order);
}

struct SeriesExpr::Node {
    enum class Kind { Constant, Unknown, Add, Sub, Mul, Inverse, Substitute };
    Kind kind;
    Polynomial value;                      // Constant
    std::shared_ptr<const Node> lhs, rhs;  // Add/Sub/Mul; lhs only for Inverse/Substitute
    std::size_t monomial = 1;              // Substitute
};

SeriesExpr SeriesExpr::constant(Polynomial p) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Constant;
    n->value = std::move(p);
    return SeriesExpr(std::move(n));
}

SeriesExpr SeriesExpr::unknown() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Unknown;
    return SeriesExpr(std::move(n));
}

SeriesExpr SeriesExpr::inverse(SeriesExpr e) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Inverse;
    n->lhs = std::move(e.node_);
    return SeriesExpr(std::move(n));
}

SeriesExpr SeriesExpr::substitute(SeriesExpr e, std::size_t m) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Substitute;
    n->lhs = std::move(e.node_);
    n->monomial = m;
    return SeriesExpr(std::move(n));
}

SeriesExpr operator+(SeriesExpr a, SeriesExpr b) {
    auto n = std::make_shared<SeriesExpr::Node>();
    n->kind = SeriesExpr::Node::Kind::Add;
    n->lhs = std::move(a.node_);
    n->rhs = std::move(b.node_);
    return SeriesExpr(std::move(n));
}

SeriesExpr operator-(SeriesExpr a, SeriesExpr b) {
    auto n = std::make_shared<SeriesExpr::Node>();
    n->kind = SeriesExpr::Node::Kind::Sub;
    n->lhs = std::move(a.node_);
    n->rhs = std::move(b.node_);
    return SeriesExpr(std::move(n));
}

SeriesExpr operator*(SeriesExpr a, SeriesExpr b) {
    auto n = std::make_shared<SeriesExpr::Node>();
    n->kind = SeriesExpr::Node::Kind::Mul;
    n->lhs = std::move(a.node_);
    n->rhs = std::move(b.node_);
    return SeriesExpr(std::move(n));
}

namespace {

PowerSeries eval_node(const SeriesExpr::Node& n, const PowerSeries& u, int order);

PowerSeries eval_child(const std::shared_ptr<const SeriesExpr::Node>& n, const PowerSeries& u,
                       int order) {
    return eval_node(*n, u, order);
}

PowerSeries eval_node(const SeriesExpr::Node& n, const PowerSeries& u, int order) {
    using Kind = SeriesExpr::Node::Kind;
    switch (n.kind) {
        case Kind::Constant:
            return PowerSeries::from_polynomial(n.value, order);
        case Kind::Unknown:
            return u.truncated(std::min(order, u.order()));
        case Kind::Add:
            return add(eval_child(n.lhs, u, order), eval_child(n.rhs, u, order));
        case Kind::Sub:
            return sub(eval_child(n.lhs, u, order), eval_child(n.rhs, u, order));
        case Kind::Mul:
            return mul(eval_child(n.lhs, u, order), eval_child(n.rhs, u, order), order);
        case Kind::Inverse:
            return inverse(eval_child(n.lhs, u, order), order);
        case Kind::Substitute:
            return substitute_monomial(eval_child(n.lhs, u, order), n.monomial, order);
    }
    throw Error("SeriesExpr: corrupt node");
}

}  // namespace

PowerSeries SeriesExpr::evaluate(const PowerSeries& u, int order) const {
    return eval_node(*node_, u, order);
}

PowerSeries fixed_point(const SeriesExpr& phi, int order) {
    PowerSeries u = PowerSeries::one(order);
    for (int iter = 0; iter <= order; ++iter) {
        PowerSeries v = phi.evaluate(u, order);
        if (v == u) return u;
        u = std::move(v);
    }
    // One final stability test after N+1 applications.
    if (phi.evaluate(u, order) == u) return u;
    throw NoConvergence("fixed_point: iterate not stable after order+1 steps");
}

}  // namespace hlab
