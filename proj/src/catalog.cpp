#include "hankel_lab/catalog.hpp"

#include <cstdlib>
#include <utility>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/pattern.hpp"
#include "hankel_lab/power_series.hpp"

namespace hlab {

namespace {

Int binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = exact_div(r * Int(n - k + i), Int(i), "binom");
    }
    return r;
}

IntSeq jacobsthal_terms(int order) {
    // J_n = (2^n - (-1)^n) / 3
    IntSeq r;
    for (int n = 0; n <= order; ++n) {
        r.push_back(formula_div(pow2(static_cast<unsigned>(n)) - alt_sign(n), 3, "jacobsthal"));
    }
    return r;
}

IntSeq catalan_terms(int order) {
    IntSeq r;
    for (std::int64_t n = 0; n <= order; ++n) {
        r.push_back(formula_div(binom(2 * n, n), Int(n + 1), "catalan"));
    }
    return r;
}

IntSeq motzkin_terms(int order) {
    // M_0 = 1, M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}
    IntSeq m{Int(1)};
    for (int n = 0; n < order; ++n) {
        Int next = m[n];
        for (int k = 0; k + 1 <= n; ++k) next += m[k] * m[n - 1 - k];
        m.push_back(next);
    }
    return m;
}

IntSeq fibonacci_terms(int order) {
    IntSeq r{Int(0)};
    if (order >= 1) r.push_back(1);
    for (int n = 2; n <= order; ++n) r.push_back(r[n - 1] + r[n - 2]);
    return r;
}

std::int64_t fib64(std::size_t n) {
    if (n > 90) throw InvalidPower("fibonacci power index out of supported range");
    std::int64_t a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t t = a + b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t pentagonal_power(std::size_t k) {
    // (6k^2+6k+1)/16 - (2k+1)(-1)^k/16, plus 1 at k=0
    std::int64_t n = static_cast<std::int64_t>(k);
    std::int64_t numer = 6 * n * n + 6 * n + 1 - (2 * n + 1) * (n % 2 == 0 ? 1 : -1);
    if (numer % 16 != 0) throw InexactDivision("pentagonal power formula");
    return numer / 16 + (k == 0 ? 1 : 0);
}

std::int64_t pow2_64(std::size_t e) {
    if (e >= 62) throw InvalidPower("power of two exceeds supported range");
    return std::int64_t(1) << e;
}

// Materializes p_0..p_N from a rule and maps through p_to_b.
IntSeq pattern_from_rule(const PowerFn& powers, int order) {
    std::vector<std::int64_t> p;
    for (int k = 0; k <= order; ++k) p.push_back(powers(static_cast<std::size_t>(k)));
    PatternSeq b = p_to_b(PowerSeq{std::move(p)});
    IntSeq r;
    for (auto v : b.b) r.emplace_back(v);
    return r;
}

IntSeq rule_terms(const PowerFn& powers, int order) {
    IntSeq r;
    for (int k = 0; k <= order; ++k) r.emplace_back(powers(static_cast<std::size_t>(k)));
    return r;
}

// Catalan generating function via its defining quadratic c = 1 + x c^2.
PowerSeries catalan_series(int order) {
    auto u = SeriesExpr::unknown();
    return fixed_point(SeriesExpr::constant(1) + SeriesExpr::x() * u * u, order);
}

// The shared fixed point u = 1/(1 - x/(1 - x/(1 - x^2 u))); its solution is
// the Motzkin generating function.
PowerSeries motzkin_series_via_fixed_point(int order) {
    auto u = SeriesExpr::unknown();
    auto x = SeriesExpr::x();
    auto x2 = SeriesExpr::constant(Polynomial::monomial(2));
    auto phi = SeriesExpr::inverse(
        SeriesExpr::constant(1) -
        x * SeriesExpr::inverse(SeriesExpr::constant(1) -
                                x * SeriesExpr::inverse(SeriesExpr::constant(1) - x2 * u)));
    return fixed_point(phi, order);
}

// 1/(1 - x/(1 - x * g)) for a given inner series g.
PowerSeries nest_two_levels(const PowerSeries& g, int order) {
    PowerSeries one = PowerSeries::one(order);
    PowerSeries x = PowerSeries::monomial(1, order);
    PowerSeries inner = inverse(sub(one, mul(x, g, order)), order);
    return inverse(sub(one, mul(x, inner, order)), order);
}

}  // namespace

PowerFn gap_template_powers(std::int64_t r) {
    if (r < 1) throw InvalidPower("gap template parameter must be >= 1");
    return [r](std::size_t k) -> std::int64_t {
        if (k == 0) return 1;
        if (k == 1) return r;
        if (k == 2) return r + 1;
        return 2;
    };
}

CfSpec gap_template(std::int64_t r) { return CfSpec::from_rule(gap_template_powers(r)); }

Catalog::Catalog() {
    auto add = [this](std::string name, std::string kind, std::string description,
                      std::function<IntSeq(int)> terms, bool has_cf = false) {
        entries_.push_back({std::move(name), std::move(kind), std::move(description),
                            std::move(terms), has_cf});
    };
    auto add_cf = [&](std::string name, std::string description, PowerFn rule) {
        add(std::move(name), "cf-powers", std::move(description),
            [rule](int order) { return rule_terms(rule, order); }, true);
    };

    // Plain term sequences.
    add("jacobsthal", "terms", "Jacobsthal numbers (2^n-(-1)^n)/3, A001045; also the Hankel "
        "pattern with the duplicated 1 kept", jacobsthal_terms);
    add("catalan", "terms", "Catalan numbers binom(2n,n)/(n+1), A000108", catalan_terms);
    add("motzkin", "terms", "Motzkin numbers by the recurrence M_{n+1} = M_n + sum M_k M_{n-1-k}, "
        "A001006", motzkin_terms);
    add("fibonacci", "terms", "Fibonacci numbers, A000045; also the Fibonacci Hankel pattern",
        fibonacci_terms);

    // Hankel pattern sequences.
    add("jacobsthal_dedup_pattern", "pattern", "0,1,3,5,11,21,...: Jacobsthal numbers with the "
        "duplicated 1 dropped", [](int order) {
            IntSeq j = jacobsthal_terms(order + 1);
            IntSeq r{Int(0)};
            for (int n = 1; n <= order; ++n) r.push_back(j[n + 1]);
            return r;
        });
    add("floor_half_pattern", "pattern", "floor((n+1)/2): 0,1,1,2,2,3,3,...; the Catalan pattern",
        [](int order) {
            IntSeq r;
            for (int n = 0; n <= order; ++n) r.emplace_back((n + 1) / 2);
            return r;
        });
    add("natural_pattern", "pattern", "b_n = n: strictly increasing pattern, all multiplicities 1",
        [](int order) {
            IntSeq r;
            for (int n = 0; n <= order; ++n) r.emplace_back(n);
            return r;
        });
    add("a032766_pattern", "pattern", "floor(3n/2): 0,1,3,4,6,7,...; numbers congruent to 0 or 1 "
        "mod 3 (A032766)", [](int order) {
            IntSeq r;
            for (int n = 0; n <= order; ++n) r.emplace_back(3 * n / 2);
            return r;
        });
    add("triangular_pattern", "pattern", "triangular numbers binom(n+1,2), A000217", [](int order) {
            IntSeq r;
            for (std::int64_t n = 0; n <= order; ++n) r.push_back(binom(n + 1, 2));
            return r;
        });
    add("paired_triangular_pattern", "pattern", "triangular numbers each taken twice: "
        "0,1,1,3,3,6,6,10,10,...", [](int order) {
            IntSeq r;
            for (std::int64_t n = 0; n <= order; ++n) {
                std::int64_t k = (n + 1) / 2;
                r.push_back(formula_div(Int(k) * Int(k + 1), 2, "paired_triangular_pattern"));
            }
            return r;
        });
    add("odds_pattern", "pattern", "0,3,5,10,14,21,27,...: pattern of the odd-numbers CF powers "
        "(essentially A176222)", [](int order) {
            return pattern_from_rule([](std::size_t k) { return std::int64_t(2 * k + 1); }, order);
        });
    add("odd_pairs_pattern", "pattern", "(2n^2+6n+1+(2n-1)(-1)^n)/8: 0,1,3,4,8,9,15,16,...",
        [](int order) {
            IntSeq r;
            for (std::int64_t n = 0; n <= order; ++n) {
                Int numer = 2 * n * n + 6 * n + 1 + Int(2 * n - 1) * alt_sign(n);
                r.push_back(formula_div(numer, 8, "odd_pairs_pattern"));
            }
            return r;
        });
    add("odd_triples_variant_pattern", "pattern", "0,2,3,5,6,10,11,15,18,...: expansion of "
        "x(2+x-2x^3+x^4)/((1-x)^3(1+2x+2x^2+x^3))", [](int order) {
            Polynomial num = Polynomial::monomial(1) * Polynomial{2, 1, 0, -2, 1};
            Polynomial omx{1, -1};
            Polynomial den = omx * omx * omx * Polynomial{1, 2, 2, 1};
            return rational(num, den, order).terms();
        });
    add("a028724_pattern", "pattern", "floor((n+1)/2)*floor((n+2)/2)*floor((n+3)/2)/2: "
        "0,1,2,6,9,18,24,40,..., A028724", [](int order) {
            IntSeq r;
            for (std::int64_t n = 0; n <= order; ++n) {
                Int prod = Int((n + 1) / 2) * Int((n + 2) / 2) * Int((n + 3) / 2);
                r.push_back(formula_div(prod, 2, "a028724_pattern"));
            }
            return r;
        });
    add("motzkin_pattern", "pattern", "n - floor(n/3): 0,1,2,2,3,4,4,...; the Motzkin pattern",
        [](int order) {
            IntSeq r;
            for (std::int64_t n = 0; n <= order; ++n) r.emplace_back(n - n / 3);
            return r;
        });
    add("a054391_pattern", "pattern", "n - floor((n+1)/3): 0,1,1,2,3,3,4,5,5,...; odd-indexed "
        "nonzeros doubled", [](int order) {
            IntSeq r;
            for (std::int64_t n = 0; n <= order; ++n) r.emplace_back(n - (n + 1) / 3);
            return r;
        });
    add("gap_pattern", "pattern", "0 then n+2: 0,3,4,5,6,...; leading gap of two zeros",
        [](int order) {
            IntSeq r{Int(0)};
            for (int n = 1; n <= order; ++n) r.emplace_back(n + 2);
            return r;
        });

    // CF power rules.
    add_cf("catalan_cf_powers", "all-ones CF powers; expansion is the Catalan numbers",
           [](std::size_t) -> std::int64_t { return 1; });
    add_cf("jacobsthal_dedup_cf_powers", "1,1,3,4,8,16,...: 1,1,3 then powers of two",
           [](std::size_t k) -> std::int64_t {
               if (k < 2) return 1;
               if (k == 2) return 3;
               return pow2_64(k - 1);
           });
    add_cf("jacobsthal_dup_cf_powers", "1,1,1,2,4,8,...: three ones then powers of two",
           [](std::size_t k) -> std::int64_t { return k < 3 ? 1 : pow2_64(k - 2); });
    add_cf("ones_then_twos_cf_powers", "1,1,2,2,2,...", [](std::size_t k) -> std::int64_t {
               return k < 2 ? 1 : 2;
           });
    add_cf("ones_then_threes_cf_powers", "1,1,3,3,3,...", [](std::size_t k) -> std::int64_t {
               return k < 2 ? 1 : 3;
           });
    add_cf("extended_odds_cf_powers", "1,1,3,5,7,9,...: extended odd numbers",
           [](std::size_t k) -> std::int64_t { return k < 2 ? 1 : std::int64_t(2 * k - 1); });
    add_cf("halved_integers_cf_powers", "1,1,1,2,2,3,3,...: floor((n+1)/2) plus 1 at n=0",
           [](std::size_t k) -> std::int64_t {
               return k == 0 ? 1 : std::int64_t((k + 1) / 2);
           });
    add_cf("odds_cf_powers", "1,3,5,7,...: odd numbers; expansion is A143951 (Dyck paths by area)",
           [](std::size_t k) -> std::int64_t { return std::int64_t(2 * k + 1); });
    add_cf("odd_pairs_cf_powers", "1,1,3,3,5,5,...: each odd number twice",
           [](std::size_t k) -> std::int64_t { return std::int64_t(2 * (k / 2) + 1); });
    add_cf("odd_triples_cf_powers", "1,1,1,3,3,3,5,5,5,...: each odd number three times",
           [](std::size_t k) -> std::int64_t { return std::int64_t(2 * (k / 3) + 1); });
    add_cf("odd_triples_variant_cf_powers", "1,2,3,3,3,5,5,5,7,7,7,...",
           [](std::size_t k) -> std::int64_t {
               if (k == 0) return 1;
               if (k == 1) return 2;
               return std::int64_t(2 * ((k + 1) / 3) + 1);
           });
    add_cf("a054391_cf_powers", "1,1,1,1 then the cycle 2,1,1; expansion is A054391",
           [](std::size_t k) -> std::int64_t {
               return k < 4 ? 1 : ((k - 4) % 3 == 0 ? 2 : 1);
           });
    add_cf("motzkin_cf_powers", "the cycle 1,1,2; expansion is the Motzkin numbers",
           [](std::size_t k) -> std::int64_t { return k % 3 == 2 ? 2 : 1; });
    add_cf("pentagonal_cf_powers", "1,1,2,5,7,12,15,22,...: generalized pentagonal numbers with "
           "p_0 = 1, A001318", pentagonal_power);
    add_cf("fibonacci_cf_powers", "1,1,1,1,2,3,5,8,13,...: 1,1 then Fibonacci numbers",
           [](std::size_t k) -> std::int64_t { return k < 2 ? 1 : fib64(k - 1); });
    add_cf("gap_cf_powers", "1,3,4,2,2,2,...: the gap template at r=3", gap_template_powers(3));

    // Sign cycles.
    add("pentagonal_sign_cycle", "sign-cycle", "the sign choice -,-,+,+ repeated; pairs with "
        "pentagonal_cf_powers", [](int order) {
            IntSeq r;
            static const int cycle[4] = {-1, -1, 1, 1};
            for (int n = 0; n <= order; ++n) r.emplace_back(cycle[n % 4]);
            return r;
        });

    // Cross-check identities: two independent routes compared mod x^{N+1}.
    auto add_identity = [this](std::string name, std::string description,
                               std::function<bool(int)> check) {
        identities_.push_back({std::move(name), std::move(description), std::move(check)});
    };
    auto expansion_of = [this](const char* name, int order) {
        return cf_expand(cf_spec(name), order);
    };
    auto pattern_of = [this](const char* name, int order) {
        return pattern_from_rule(power_rule(name), order);
    };

    add_identity("catalan", "all-ones CF expansion equals the closed-form Catalan numbers",
                 [this, expansion_of](int order) {
                     return expansion_of("catalan_cf_powers", order) == catalan_terms(order);
                 });
    add_identity("ones_then_twos", "CF expansion of 1,1,2,2,2,... equals 1/(1-x/(1-x c(x^2)))",
                 [expansion_of](int order) {
                     PowerSeries c = catalan_series(order);
                     PowerSeries g = nest_two_levels(substitute_monomial(c, 2, order), order);
                     return expansion_of("ones_then_twos_cf_powers", order) == g.terms();
                 });
    add_identity("ones_then_threes", "CF expansion of 1,1,3,3,3,... equals 1/(1-x/(1-x c(x^3)))",
                 [expansion_of](int order) {
                     PowerSeries c = catalan_series(order);
                     PowerSeries g = nest_two_levels(substitute_monomial(c, 3, order), order);
                     return expansion_of("ones_then_threes_cf_powers", order) == g.terms();
                 });
    add_identity("motzkin", "CF expansion of the 1,1,2 cycle equals the Motzkin recurrence terms",
                 [expansion_of](int order) {
                     return expansion_of("motzkin_cf_powers", order) == motzkin_terms(order);
                 });
    add_identity("motzkin_fixed_point", "the fixed point of u = 1/(1-x/(1-x/(1-x^2 u))) equals "
                 "the Motzkin recurrence terms", [](int order) {
                     return motzkin_series_via_fixed_point(order).terms() == motzkin_terms(order);
                 });
    add_identity("a054391", "CF expansion of 1,1,1,1,(2,1,1)* equals 1/(1-x/(1-x u)) with u the "
                 "fixed point of u = 1/(1-x/(1-x/(1-x^2 u)))", [expansion_of](int order) {
                     PowerSeries u = motzkin_series_via_fixed_point(order);
                     return expansion_of("a054391_cf_powers", order) ==
                            nest_two_levels(u, order).terms();
                 });

    struct PatternPair {
        const char* pattern;
        const char* powers;
    };
    static const PatternPair pattern_pairs[] = {
        {"floor_half_pattern", "catalan_cf_powers"},
        {"natural_pattern", "ones_then_twos_cf_powers"},
        {"a032766_pattern", "ones_then_threes_cf_powers"},
        {"triangular_pattern", "extended_odds_cf_powers"},
        {"paired_triangular_pattern", "halved_integers_cf_powers"},
        {"odd_pairs_pattern", "odd_pairs_cf_powers"},
        {"odd_triples_variant_pattern", "odd_triples_variant_cf_powers"},
        {"a028724_pattern", "pentagonal_cf_powers"},
        {"motzkin_pattern", "motzkin_cf_powers"},
        {"a054391_pattern", "a054391_cf_powers"},
        {"gap_pattern", "gap_cf_powers"},
        {"jacobsthal_dedup_pattern", "jacobsthal_dedup_cf_powers"},
        {"jacobsthal", "jacobsthal_dup_cf_powers"},
        {"fibonacci", "fibonacci_cf_powers"},
    };
    for (const auto& pp : pattern_pairs) {
        add_identity(std::string(pp.pattern) + "_vs_" + pp.powers,
                     std::string("registered rule for ") + pp.pattern +
                         " equals the pattern derived from " + pp.powers,
                     [this, pp, pattern_of](int order) {
                         return named_terms(pp.pattern, order) == pattern_of(pp.powers, order);
                     });
    }
}

const Catalog& Catalog::instance() {
    static const Catalog c;
    return c;
}

namespace {

// Recognizes "gap_template(5)" and "gap_template(r=5)".
bool parse_gap_template(const std::string& name, std::int64_t& r) {
    const std::string prefix = "gap_template(";
    if (name.rfind(prefix, 0) != 0 || name.back() != ')') return false;
    std::string arg = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    if (arg.rfind("r=", 0) == 0) arg = arg.substr(2);
    if (arg.empty()) return false;
    char* end = nullptr;
    long long v = std::strtoll(arg.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') return false;
    r = v;
    return true;
}

}  // namespace

const NamedRule& Catalog::find(const std::string& name) const {
    for (const auto& e : entries_) {
        if (e.name == name) return e;
    }
    throw UnknownName("no catalog entry named '" + name + "'");
}

IntSeq Catalog::named_terms(const std::string& name, int order) const {
    if (order < 0) throw Error("named_terms: negative order");
    std::int64_t r;
    if (parse_gap_template(name, r)) return rule_terms(gap_template_powers(r), order);
    return find(name).terms(order);
}

PowerFn Catalog::power_rule(const std::string& name) const {
    std::int64_t r;
    if (parse_gap_template(name, r)) return gap_template_powers(r);
    const NamedRule& e = find(name);
    if (!e.has_cf) {
        throw UnknownName("catalog entry '" + name + "' is not a CF power rule");
    }
    auto terms = e.terms;
    return [terms](std::size_t k) -> std::int64_t {
        IntSeq vals = terms(static_cast<int>(k));
        const Int& v = vals.at(k);
        if (v < 1) throw InvalidPower("catalog power < 1 at level " + std::to_string(k));
        return static_cast<std::int64_t>(v);
    };
}

CfSpec Catalog::cf_spec(const std::string& name) const {
    return CfSpec::from_rule(power_rule(name));
}

bool Catalog::gf_identity_check(const std::string& name, int order) const {
    for (const auto& id : identities_) {
        if (id.name == name) return id.check(order);
    }
    throw UnknownName("no registered identity named '" + name + "'");
}

}  // namespace hlab
