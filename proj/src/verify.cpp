#include "hankel_lab/verify.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "hankel_lab/analysis.hpp"
#include "hankel_lab/catalog.hpp"
#include "hankel_lab/contfrac.hpp"
#include "hankel_lab/errors.hpp"
#include "hankel_lab/pattern.hpp"

namespace hlab {

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    // got must cover want and agree on that prefix.
    void prefix_eq(const IntSeq& got, const IntSeq& want, const std::string& what) {
        if (got.size() < want.size()) {
            fail(what + ": got " + std::to_string(got.size()) + " terms, want " +
                 std::to_string(want.size()));
            return;
        }
        for (std::size_t i = 0; i < want.size(); ++i) {
            if (got[i] != want[i]) {
                fail(what + " differs at index " + std::to_string(i) + ": got " + got[i].str() +
                     ", want " + want[i].str());
                return;
            }
        }
    }
    void eq64(const std::vector<std::int64_t>& got, const std::vector<std::int64_t>& want,
              const std::string& what) {
        IntSeq g, w;
        for (auto v : got) g.emplace_back(v);
        for (auto v : want) w.emplace_back(v);
        if (got.size() != want.size()) {
            fail(what + ": got " + std::to_string(got.size()) + " values, want " +
                 std::to_string(want.size()));
            return;
        }
        prefix_eq(g, w, what);
    }
    void pass_verdict(const ConjectureReport& rep, const std::string& what) {
        if (rep.verdict != "PASS") {
            fail(what + ": verdict " + rep.verdict +
                 (rep.verdict_reason.empty() ? "" : " (" + rep.verdict_reason + ")"));
        }
    }
};

// Materializes enough of an infinite catalog power rule that the honest
// window of the report reaches `order` exactly, then runs the check.
ConjectureReport rule_check(const std::string& name, int order, std::vector<int> signs = {}) {
    PowerFn rule = Catalog::instance().power_rule(name);
    std::vector<std::int64_t> p, b;
    Int sum = 0;
    for (std::size_t k = 0; k < 100000; ++k) {
        p.push_back(rule(k));
        sum += p.back();
        b.push_back(p.back() + (k >= 2 ? b[k - 2] : (k % 2 == 0 ? -1 : 0)));
        if (sum > 2 * order && b.back() >= order) break;
    }
    return check_conjecture(ConjectureSource::from_powers(p, std::move(signs)), order);
}

IntSeq expand_rule(const std::string& name, int order, std::vector<int> signs = {}) {
    CfSpec spec = Catalog::instance().cf_spec(name);
    spec.sign_cycle = std::move(signs);
    return cf_expand(spec, order);
}

std::vector<std::int64_t> pattern_prefix(const std::string& powers_name, int order) {
    PowerFn rule = Catalog::instance().power_rule(powers_name);
    std::vector<std::int64_t> p;
    for (int k = 0; k <= order; ++k) p.push_back(rule(static_cast<std::size_t>(k)));
    return p_to_b(PowerSeq{std::move(p)}).b;
}

void check_jacobsthal_dedup(Check& c) {
    PowerSeq p = b_to_p(PatternSeq{{0, 1, 3, 5, 11, 21}});
    c.eq64(p.p, {1, 1, 3, 4, 8, 16}, "powers from pattern");

    IntSeq a = expand_rule("jacobsthal_dedup_cf_powers", 46);
    c.prefix_eq(a, seq_of({1, 1, 2, 4, 8, 17, 36, 76, 161, 342, 726, 1541, 3272, 6948, 14753}),
                "expansion");
    HankelResult h = hankel_transform(a);
    c.prefix_eq(h.values,
                seq_of({1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1,
                        0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}),
                "transform");
    c.pass_verdict(rule_check("jacobsthal_dedup_cf_powers", 22), "conjecture check");
}

void check_jacobsthal_dup(Check& c) {
    PowerSeq p = b_to_p(PatternSeq{{0, 1, 1, 3, 5, 11}});
    c.eq64(p.p, {1, 1, 1, 2, 4, 8}, "powers from pattern");

    IntSeq a = expand_rule("jacobsthal_dup_cf_powers", 46);
    c.prefix_eq(a, seq_of({1, 1, 2, 5, 13, 35, 95, 259, 707, 1932, 5281, 14438, 39475, 107933,
                           295115, 806922, 2206342}),
                "expansion");
    HankelResult h = hankel_transform(a);
    c.prefix_eq(h.values,
                seq_of({1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1,
                        0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}),
                "transform");

    ConjectureReport rep = rule_check("jacobsthal_dup_cf_powers", 22);
    c.pass_verdict(rep, "conjecture check");
    bool dup_of_one = false;
    for (const auto& [value, count] : rep.multiplicity_table) {
        if (value == 1 && count == 2) dup_of_one = true;
    }
    c.expect(dup_of_one, "value 1 should carry multiplicity 2");
}

void check_catalan(Check& c) {
    const Catalog& cat = Catalog::instance();
    IntSeq a = expand_rule("catalan_cf_powers", 28);
    c.prefix_eq(a, cat.named_terms("catalan", 28), "expansion vs closed form");
    HankelResult h = hankel_transform(a);
    c.expect(h.values.size() == 15, "15 determinants expected");
    for (const Int& v : h.values) {
        if (v != 1) {
            c.fail("transform value " + v.str() + " != 1");
            break;
        }
    }
    c.eq64(pattern_prefix("catalan_cf_powers", 10), {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5}, "pattern");
    c.pass_verdict(rule_check("catalan_cf_powers", 14), "conjecture check");
}

void check_ones_then_twos(Check& c) {
    IntSeq a = expand_rule("ones_then_twos_cf_powers", 28);
    c.prefix_eq(a, seq_of({1, 1, 2, 4, 9, 20, 46, 105, 243, 560, 1299, 3006}), "expansion");
    HankelResult h = hankel_transform(a);
    for (const Int& v : h.values) {
        if (v != 1) {
            c.fail("transform value " + v.str() + " != 1");
            break;
        }
    }
    c.eq64(pattern_prefix("ones_then_twos_cf_powers", 8), {0, 1, 2, 3, 4, 5, 6, 7, 8}, "pattern");
    c.expect(Catalog::instance().gf_identity_check("ones_then_twos", 24),
             "closed-form generating function identity");
    c.pass_verdict(rule_check("ones_then_twos_cf_powers", 14), "conjecture check");
}

void check_ones_then_threes(Check& c) {
    IntSeq a = expand_rule("ones_then_threes_cf_powers", 32);
    c.prefix_eq(a, seq_of({1, 1, 2, 4, 8, 17, 36, 76, 162, 345, 734, 1565, 3336, 7109, 15158,
                           32318, 68898}),
                "expansion");
    HankelResult h = hankel_transform(a);
    c.prefix_eq(h.values, seq_of({1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0}), "periodic transform");
    c.eq64(pattern_prefix("ones_then_threes_cf_powers", 10), {0, 1, 3, 4, 6, 7, 9, 10, 12, 13, 15},
           "pattern");
    c.expect(Catalog::instance().gf_identity_check("ones_then_threes", 24),
             "closed-form generating function identity");
    c.pass_verdict(rule_check("ones_then_threes_cf_powers", 15), "conjecture check");
}

void check_triangular(Check& c) {
    IntSeq a = expand_rule("extended_odds_cf_powers", 44);
    c.prefix_eq(a, seq_of({1, 1, 2, 4, 8, 17, 36, 76, 161, 341, 723, 1533, 3250, 6891, 14611,
                           30980, 65688, 139281}),
                "expansion");
    HankelResult h = hankel_transform(a);
    IntSeq h_ref = seq_of({1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 1, 0,
                           0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0});
    c.prefix_eq(h.values, h_ref, "transform");

    IntSeq e = eta_convolution(h_ref);
    c.prefix_eq(even_subsequence(e), seq_of({1, -1, 2, 1, 0, 2, 1, 0, 0, 2, 1, 2}),
                "eta convolution, even terms");

    c.eq64(pattern_prefix("extended_odds_cf_powers", 8), {0, 1, 3, 6, 10, 15, 21, 28, 36},
           "triangular pattern");
    c.pass_verdict(rule_check("extended_odds_cf_powers", 22), "conjecture check");
}

void check_paired_triangular(Check& c) {
    IntSeq a = expand_rule("halved_integers_cf_powers", 36);
    c.prefix_eq(a, seq_of({1, 1, 2, 5, 13, 35, 95, 260, 713, 1959, 5386, 14815, 40759, 112151,
                           308609, 849240, 2337009, 6431246}),
                "expansion");
    HankelResult h = hankel_transform(a);
    c.prefix_eq(h.values, seq_of({1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0}),
                "transform");
    c.eq64(pattern_prefix("halved_integers_cf_powers", 10), {0, 1, 1, 3, 3, 6, 6, 10, 10, 15, 15},
           "pattern");

    std::vector<std::int64_t> p;
    PowerFn rule = Catalog::instance().power_rule("halved_integers_cf_powers");
    for (std::size_t k = 0; k < 13; ++k) p.push_back(rule(k));
    ConjectureReport rep = check_conjecture(ConjectureSource::from_powers(p), 15);
    c.pass_verdict(rep, "conjecture check");
    c.eq64(rep.expected_support, {0, 1, 3, 6, 10, 15}, "support in window");
    for (const auto& [value, count] : rep.multiplicity_table) {
        if ((value == 1 || value == 3 || value == 6 || value == 10 || value == 15) && count != 2) {
            c.fail("value " + std::to_string(value) + " should have multiplicity 2");
        }
    }
}

void check_odd_block_family(Check& c) {
    // blocks of one: 1,3,5,7,...
    IntSeq a = expand_rule("odds_cf_powers", 43);
    HankelResult h = hankel_transform(a);
    c.prefix_eq(h.values,
                seq_of({1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1}),
                "blocks-of-1 transform");
    c.eq64(pattern_prefix("odds_cf_powers", 10), {0, 3, 5, 10, 14, 21, 27, 36, 44, 55, 65},
           "blocks-of-1 pattern");
    c.pass_verdict(rule_check("odds_cf_powers", 21), "blocks-of-1 conjecture check");

    // blocks of two: 1,1,3,3,5,5,...
    a = expand_rule("odd_pairs_cf_powers", 38);
    c.prefix_eq(a, seq_of({1, 1, 2, 4, 8, 17, 36, 76, 162, 345, 734, 1564, 3332}),
                "blocks-of-2 expansion");
    h = hankel_transform(a);
    c.prefix_eq(h.values, seq_of({1, 1, 0, -1, -1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 1, 1, 0, 0}),
                "blocks-of-2 transform");
    c.eq64(pattern_prefix("odd_pairs_cf_powers", 10), {0, 1, 3, 4, 8, 9, 15, 16, 24, 25, 35},
           "blocks-of-2 pattern");
    IntSeq formula = Catalog::instance().named_terms("odd_pairs_pattern", 10);
    c.prefix_eq(formula, seq_of({0, 1, 3, 4, 8, 9, 15, 16, 24, 25, 35}),
                "blocks-of-2 pattern formula");
    c.pass_verdict(rule_check("odd_pairs_cf_powers", 18), "blocks-of-2 conjecture check");

    // blocks of three: 1,1,1,3,3,3,...
    a = expand_rule("odd_triples_cf_powers", 34);
    c.prefix_eq(a, seq_of({1, 1, 2, 5, 13, 34, 90, 239, 635, 1689, 4494, 11958, 31823, 84692,
                           225396}),
                "blocks-of-3 expansion");
    h = hankel_transform(a);
    c.prefix_eq(h.values, seq_of({1, 1, 0, 0, -1, 0, 0, 1, 0, -1, 0, 0, 1, 0, -1, 0}),
                "blocks-of-3 transform");
    ConjectureReport rep = rule_check("odd_triples_cf_powers", 15);
    c.pass_verdict(rep, "blocks-of-3 conjecture check");
    c.eq64(rep.expected_support, {0, 1, 4, 7, 9, 12, 14}, "blocks-of-3 support in window");

    // the 1,2,3,3,3,5,5,5,... variant
    a = expand_rule("odd_triples_variant_cf_powers", 34);
    h = hankel_transform(a);
    c.prefix_eq(h.values, seq_of({1, 0, -1, -1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1}),
                "variant transform");
    c.prefix_eq(Catalog::instance().named_terms("odd_triples_variant_pattern", 14),
                seq_of({0, 2, 3, 5, 6, 10, 11, 15, 18, 22, 25, 31, 34, 40, 45}),
                "variant pattern from rational generating function");
    c.eq64(pattern_prefix("odd_triples_variant_cf_powers", 14),
           {0, 2, 3, 5, 6, 10, 11, 15, 18, 22, 25, 31, 34, 40, 45}, "variant derived pattern");
    c.pass_verdict(rule_check("odd_triples_variant_cf_powers", 15), "variant conjecture check");
}

void check_a054391(Check& c) {
    IntSeq a = expand_rule("a054391_cf_powers", 28);
    c.prefix_eq(a, seq_of({1, 1, 2, 5, 14, 41, 123, 374, 1147, 3538, 10958, 34042, 105997}),
                "expansion");
    c.eq64(pattern_prefix("a054391_cf_powers", 20),
           {0, 1, 1, 2, 3, 3, 4, 5, 5, 6, 7, 7, 8, 9, 9, 10, 11, 11, 12, 13, 13}, "pattern");
    ConjectureReport rep = rule_check("a054391_cf_powers", 14);
    c.pass_verdict(rep, "conjecture check");
    for (const Int& v : rep.h.values) {
        if (v != 1) {
            c.fail("transform value " + v.str() + " != 1");
            break;
        }
    }
    c.expect(Catalog::instance().gf_identity_check("a054391", 20), "fixed-point identity");
}

void check_motzkin(Check& c) {
    const Catalog& cat = Catalog::instance();
    IntSeq a = expand_rule("motzkin_cf_powers", 14);
    c.prefix_eq(a, cat.named_terms("motzkin", 14), "expansion vs recurrence");
    c.eq64(pattern_prefix("motzkin_cf_powers", 20),
           {0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 10, 10, 11, 12, 12, 13, 14}, "pattern");
    ConjectureReport rep = rule_check("motzkin_cf_powers", 14);
    c.pass_verdict(rep, "conjecture check");
    for (const Int& v : rep.h.values) {
        if (v != 1) {
            c.fail("transform value " + v.str() + " != 1");
            break;
        }
    }
    c.expect(cat.gf_identity_check("motzkin", 20), "continued fraction vs recurrence");
    c.expect(cat.gf_identity_check("motzkin_fixed_point", 20), "fixed-point identity");
}

void check_pentagonal(Check& c) {
    const Catalog& cat = Catalog::instance();
    c.prefix_eq(cat.named_terms("pentagonal_cf_powers", 10),
                seq_of({1, 1, 2, 5, 7, 12, 15, 22, 26, 35, 40}), "power values");
    c.prefix_eq(cat.named_terms("a028724_pattern", 10),
                seq_of({0, 1, 2, 6, 9, 18, 24, 40, 50, 75, 90}), "pattern formula");
    c.eq64(pattern_prefix("pentagonal_cf_powers", 10), {0, 1, 2, 6, 9, 18, 24, 40, 50, 75, 90},
           "derived pattern");

    IntSeq a = expand_rule("pentagonal_cf_powers", 42);
    c.prefix_eq(a, seq_of({1, 1, 2, 4, 9, 20, 45, 101, 227, 511, 1150, 2589, 5828, 13120, 29536,
                           66492, 149690}),
                "all-minus expansion");
    HankelResult h = hankel_transform(a);
    c.prefix_eq(h.values,
                seq_of({1, 1, 1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0}),
                "all-minus transform");
    c.pass_verdict(rule_check("pentagonal_cf_powers", 20), "all-minus conjecture check");

    std::vector<int> signs{-1, -1, 1, 1};
    a = expand_rule("pentagonal_cf_powers", 42, signs);
    c.prefix_eq(a, seq_of({1, 1, 2, 4, 7, 12, 21, 37, 65, 115, 204, 361, 638, 1128, 1994, 3524,
                           6230}),
                "sign-cycle expansion");
    h = hankel_transform(a);
    c.prefix_eq(h.values,
                seq_of({1, 1, -1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}),
                "sign-cycle transform");
    c.pass_verdict(rule_check("pentagonal_cf_powers", 20, signs), "sign-cycle conjecture check");
}

void check_fibonacci(Check& c) {
    const Catalog& cat = Catalog::instance();
    c.prefix_eq(cat.named_terms("fibonacci_cf_powers", 12),
                seq_of({1, 1, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89}), "power values");
    IntSeq a = expand_rule("fibonacci_cf_powers", 34);
    c.prefix_eq(a, seq_of({1, 1, 2, 5, 14, 41, 123, 373, 1137, 3475, 10634, 32562, 99738, 305546,
                           936108, 2868084}),
                "expansion");
    HankelResult h = hankel_transform(a);
    c.prefix_eq(h.values, seq_of({1, 1, 1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}),
                "transform");
    c.eq64(pattern_prefix("fibonacci_cf_powers", 11), {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89},
           "pattern");
    c.pass_verdict(rule_check("fibonacci_cf_powers", 17), "conjecture check");
}

void check_gap(Check& c) {
    IntSeq a = expand_rule("gap_cf_powers", 30);
    c.prefix_eq(a, seq_of({1, 1, 1, 1, 2, 3, 4, 6, 10, 15, 23, 36, 58, 90, 145, 230, 377, 601,
                           1000}),
                "expansion");
    c.prefix_eq(hankel_transform(a).values,
                seq_of({1, 0, 0, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1}), "transform");
    c.prefix_eq(hankel_transform(a, 1).values, seq_of({1, 0, -1, 0, 1, 0, -1, 0, 1, 0}),
                "shift-1 transform");
    c.prefix_eq(hankel_transform(a, 2).values, seq_of({1, 1, -1, -1, -2, -2, -3, -3, -4, -4}),
                "shift-2 transform");
    c.prefix_eq(hankel_transform(a, 3).values, seq_of({1, -1, -1, 1, 4, -1, -9, 1, 16}),
                "shift-3 transform");
    c.prefix_eq(hankel_transform(prepend(a, seq_of({1, 1}))).values,
                seq_of({1, 0, 0, 0, 0, 1, 1, 2, 2, 3, 3}), "transform after prepending 1,1");

    c.eq64(pattern_prefix("gap_cf_powers", 10), {0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, "pattern");
    c.pass_verdict(rule_check("gap_cf_powers", 12), "conjecture check");
    for (std::int64_t r : {2, 4, 5}) {
        std::vector<std::int64_t> p;
        PowerFn rule = gap_template_powers(r);
        for (std::size_t k = 0; k < 12; ++k) p.push_back(rule(k));
        std::vector<std::int64_t> b = p_to_b(PowerSeq{p}).b;
        std::vector<std::int64_t> want{0};
        for (int n = 1; n < 12; ++n) want.push_back(r + n - 1);
        c.eq64(b, want, "template pattern at r=" + std::to_string(r));
    }
}

void check_grid(Check& c) {
    GridCheckReport rep = check_101_impossible(5);
    c.expect(rep.passed, "grid identity");
    c.expect(rep.cases == 11 * 11 * 11, "grid size");
}

void check_properties(Check& c) {
    std::string detail;
    if (!roundtrip_suite(detail)) c.fail("round-trip suite: " + detail);
    detail.clear();
    if (!determinant_suite(detail)) c.fail("determinant suite: " + detail);
    detail.clear();
    if (!invariance_suite(detail)) c.fail("invariance suite: " + detail);
    detail.clear();
    if (!depth_stability_suite(detail)) c.fail("depth stability suite: " + detail);
}

}  // namespace

Int det_reference(const SquareMatrix& m) {
    std::size_t n = m.dim();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        SquareMatrix minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t col = 0; col < n; ++col) {
                if (col == j) continue;
                minor.at(r - 1, cc++) = m.at(r, col);
            }
        }
        Int term = m.at(0, j) * det_reference(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

bool roundtrip_suite(std::string& detail) {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> len_dist(2, 40);
    std::uniform_int_distribution<std::int64_t> pow_dist(1, 9);
    std::uniform_int_distribution<std::int64_t> step_dist(0, 3);

    for (int it = 0; it < 1000; ++it) {
        std::vector<std::int64_t> p{1};
        int len = len_dist(rng);
        for (int k = 1; k < len; ++k) p.push_back(pow_dist(rng));
        PatternSeq b = p_to_b(PowerSeq{p});
        PowerSeq back = b_to_p(b);
        if (back.p != p) {
            detail = "p -> b -> p failed at iteration " + std::to_string(it);
            return false;
        }
    }
    for (int it = 0; it < 1000; ++it) {
        // grow b keeping every derived power positive
        std::vector<std::int64_t> b{0, 1 + step_dist(rng)};
        int len = len_dist(rng);
        for (int k = 2; k < len; ++k) {
            std::int64_t lo = k < 3 ? 1 : b[k - 2] + 1;  // derived p >= 1
            std::int64_t v = std::max(b[k - 1], lo) + step_dist(rng);
            b.push_back(v);
        }
        PowerSeq p = b_to_p(PatternSeq{b});
        PatternSeq back = p_to_b(p);
        if (back.b != b) {
            detail = "b -> p -> b failed at iteration " + std::to_string(it);
            return false;
        }
        if (!gf_relation_check(p, PatternSeq{b}, static_cast<int>(b.size()) - 1)) {
            detail = "generating-function relation failed at iteration " + std::to_string(it);
            return false;
        }
    }
    return true;
}

bool determinant_suite(std::string& detail) {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<int> dim_dist(1, 5);
    std::uniform_int_distribution<int> entry_dist(-9, 9);

    for (int it = 0; it < 10000; ++it) {
        std::size_t n = static_cast<std::size_t>(dim_dist(rng));
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry_dist(rng);
        }
        Int got = det_exact(m);
        Int want = det_reference(m);
        if (got != want) {
            detail = "determinant mismatch at iteration " + std::to_string(it) + ": got " +
                     got.str() + ", want " + want.str();
            return false;
        }
    }
    return true;
}

bool invariance_suite(std::string& detail) {
    const Catalog& cat = Catalog::instance();
    for (const NamedRule& e : cat.entries()) {
        IntSeq a = e.has_cf ? cf_expand(cat.cf_spec(e.name), 16) : cat.named_terms(e.name, 16);
        IntSeq h = hankel_transform(a).values;
        for (long long r : {-2, -1, 1, 2}) {
            IntSeq bt = binomial_transform(a, Int(r));
            if (hankel_transform(bt).values != h) {
                detail = "binomial transform changed the Hankel values of " + e.name + " at r=" +
                         std::to_string(r);
                return false;
            }
            if (a[0] != 0) {
                IntSeq gt = gf_transform(a, Int(r), 16);
                if (hankel_transform(gt).values != h) {
                    detail = "generating-function transform changed the Hankel values of " +
                             e.name + " at r=" + std::to_string(r);
                    return false;
                }
            }
        }
    }
    return true;
}

bool depth_stability_suite(std::string& detail) {
    const Catalog& cat = Catalog::instance();
    for (const NamedRule& e : cat.entries()) {
        if (!e.has_cf) continue;
        CfSpec spec = cat.cf_spec(e.name);
        std::size_t d = required_depth(spec.powers, 20);
        IntSeq base = cf_expand(spec, 20);
        for (std::size_t extra : {0u, 1u, 3u}) {
            if (cf_expand_with_depth(spec, 20, d + extra) != base) {
                detail = e.name + " expansion changed at depth +" + std::to_string(extra);
                return false;
            }
        }
    }

    std::mt19937_64 rng(55555);
    std::uniform_int_distribution<std::int64_t> pow_dist(2, 6);
    for (int it = 0; it < 50; ++it) {
        std::vector<std::int64_t> p{1};
        for (int k = 1; k < 12; ++k) p.push_back(pow_dist(rng));
        CfSpec spec = CfSpec::from_powers(p);
        std::size_t d = required_depth(spec.powers, 15);
        IntSeq base = cf_expand_with_depth(spec, 15, d);
        for (std::size_t depth = d + 1; depth <= std::min<std::size_t>(d + 2, p.size());
             ++depth) {
            if (cf_expand_with_depth(spec, 15, depth) != base) {
                detail = "random list expansion changed at depth " + std::to_string(depth) +
                         " (iteration " + std::to_string(it) + ")";
                return false;
            }
        }
    }
    return true;
}

std::vector<CheckResult> acceptance_battery() {
    std::vector<CheckResult> out;
    auto run = [&out](const char* id, const char* label, const std::function<void(Check&)>& fn) {
        Check c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        out.push_back({id, label, c.ok, c.detail});
    };

    run("01", "Jacobsthal pattern, duplicate dropped", check_jacobsthal_dedup);
    run("02", "Jacobsthal pattern, duplicate kept", check_jacobsthal_dup);
    run("03", "all-ones powers (Catalan)", check_catalan);
    run("04", "powers 1,1,2,2,2,...", check_ones_then_twos);
    run("05", "powers 1,1,3,3,3,...", check_ones_then_threes);
    run("06", "extended odd powers and eta convolution", check_triangular);
    run("07", "halved-integer powers, paired triangular pattern", check_paired_triangular);
    run("08", "odd powers in blocks of 1, 2, 3 and the 1,2,3,... variant",
        check_odd_block_family);
    run("09", "ones then the 2,1,1 cycle (A054391)", check_a054391);
    run("10", "the 1,1,2 cycle (Motzkin)", check_motzkin);
    run("11", "pentagonal powers under both sign choices", check_pentagonal);
    run("12", "Fibonacci powers, Fibonacci pattern", check_fibonacci);
    run("13", "gap powers 1,3,4,2,2,... with shifts and prepends", check_gap);
    run("14", "no Hankel transform begins 1,0,1", check_grid);
    run("15", "property suites", check_properties);
    return out;
}

}  // namespace hlab
