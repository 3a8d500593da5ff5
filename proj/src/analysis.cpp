#include "hankel_lab/analysis.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/power_series.hpp"

namespace hlab {

std::string render_sign_cycle(const std::vector<int>& cycle) {
    if (cycle.empty()) return "-";
    std::string s;
    for (int v : cycle) s += (v < 0 ? '-' : '+');
    return s;
}

ConjectureSource ConjectureSource::from_powers(std::vector<std::int64_t> p,
                                               std::vector<int> signs) {
    return ConjectureSource{Kind::Powers, std::move(p), std::move(signs)};
}

ConjectureSource ConjectureSource::from_pattern(std::vector<std::int64_t> b,
                                                std::vector<int> signs) {
    return ConjectureSource{Kind::Pattern, std::move(b), std::move(signs)};
}

ConjectureReport check_conjecture(const ConjectureSource& source, int order) {
    if (order < 2) throw Error("check_conjecture: order must be >= 2");

    ConjectureReport rep;
    rep.requested_order = order;
    rep.source_values = source.values;
    rep.signs = render_sign_cycle(source.sign_cycle);

    if (source.kind == ConjectureSource::Kind::Pattern) {
        rep.source_kind = "pattern";
        // Monotonicity breaks are InvalidPattern; a value repeated too often
        // (derived power < 1) is the stronger NotRepresentable from b_to_p.
        PatternVerdict v = validate_pattern(source.values);
        for (const auto& violation : v.violations) {
            if (violation.find("derived CF power") == std::string::npos) {
                throw InvalidPattern(violation);
            }
        }
        rep.pattern = source.values;
        rep.powers = b_to_p(PatternSeq{source.values}).p;
    } else {
        rep.source_kind = "powers";
        validate_power_seq(PowerSeq{source.values});
        rep.powers = source.values;
        rep.pattern = p_to_b(PowerSeq{source.values}).b;
    }

    // The given powers determine the expansion up to order sum(p)-1; beyond
    // that the hidden continuation of p matters. Stay inside what is exact.
    Int power_sum = 0;
    for (auto p : rep.powers) power_sum += p;
    int a_order = 2 * order;
    if (power_sum <= Int(a_order) + 1) a_order = static_cast<int>(power_sum) - 1;

    PowerFn powers = power_list(rep.powers);
    rep.depth = required_depth(powers, a_order);
    CfSpec spec{powers, source.sign_cycle};
    rep.a = cf_expand_with_depth(spec, a_order, rep.depth);
    rep.a_prefix_length = rep.a.size();

    rep.h = hankel_transform(rep.a, 0);
    rep.in_unit_set = rep.h.in_unit_set;
    const std::int64_t computable = static_cast<std::int64_t>(rep.h.values.size()) - 1;

    // Honest comparison window: beyond b_last a continuation of the source
    // could still add support points, so claims stop there.
    rep.window = std::min(computable, rep.pattern.back());

    std::set<std::int64_t> expected;
    for (auto v : rep.pattern) {
        if (v >= 0 && v <= rep.window) expected.insert(v);
    }
    rep.expected_support.assign(expected.begin(), expected.end());
    for (std::size_t n : rep.h.support) {
        if (static_cast<std::int64_t>(n) <= rep.window) {
            rep.observed_support.push_back(static_cast<std::int64_t>(n));
        }
    }
    rep.support_match = rep.expected_support == rep.observed_support;

    rep.multiplicity_table = multiplicities(PatternSeq{rep.pattern});
    for (const Int& v : rep.h.values) {
        if (v != 0) rep.nonzero_sign_sequence.push_back(v > 0 ? 1 : -1);
    }

    if (!rep.in_unit_set) {
        std::size_t bad = 0;
        while (bad < rep.h.values.size() &&
               rep.h.values[bad] >= -1 && rep.h.values[bad] <= 1) {
            ++bad;
        }
        rep.verdict = "FAIL";
        rep.verdict_reason = "Hankel value outside {-1,0,1} at index " + std::to_string(bad);
    } else if (rep.window < 1) {
        rep.verdict = "INCONCLUSIVE";
        rep.verdict_reason = "verified window is empty; supply more terms or a smaller order";
        rep.support_match = false;
    } else if (!rep.support_match) {
        std::string expected_s, observed_s;
        for (auto v : rep.expected_support) {
            expected_s += (expected_s.empty() ? "" : ",") + std::to_string(v);
        }
        for (auto v : rep.observed_support) {
            observed_s += (observed_s.empty() ? "" : ",") + std::to_string(v);
        }
        rep.verdict = "FAIL";
        rep.verdict_reason = "support mismatch on [0," + std::to_string(rep.window) +
                             "]: expected {" + expected_s + "}, observed {" + observed_s + "}";
    } else {
        rep.verdict = "PASS";
    }
    return rep;
}

IntSeq binomial_transform(const IntSeq& a, const Int& r) {
    std::vector<Int> rpow{Int(1)};  // r^j, with r^0 = 1 even for r = 0
    for (std::size_t j = 1; j < a.size(); ++j) rpow.push_back(rpow.back() * r);
    IntSeq out;
    for (std::size_t n = 0; n < a.size(); ++n) {
        Int c = 1;  // C(n,k), updated incrementally
        Int term = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            term += c * rpow[n - k] * a[k];
            c = exact_div(c * Int(n - k), Int(k + 1), "binomial_transform");
        }
        out.push_back(term);
    }
    return out;
}

IntSeq gf_transform(const IntSeq& a, const Int& r, int order) {
    if (order < 0) throw Error("gf_transform: negative order");
    if (a.size() <= static_cast<std::size_t>(order)) {
        throw InsufficientTerms("gf_transform needs " + std::to_string(order + 1) +
                                " terms, got " + std::to_string(a.size()));
    }
    if (a.empty() || a[0] == 0) {
        throw ZeroConstantTerm("gf_transform requires a_0 != 0");
    }
    IntSeq prefix(a.begin(), a.begin() + order + 1);
    PowerSeries f = PowerSeries::from_sequence(prefix);
    PowerSeries rxf = mul(PowerSeries::from_polynomial(Polynomial::monomial(1, r), order), f,
                          order);
    PowerSeries den = sub(PowerSeries::one(order), rxf);
    return mul(f, inverse(den, order), order).terms();
}

IntSeq eta_convolution(const IntSeq& h) {
    IntSeq e(h.size(), Int(0));
    for (std::size_t n = 0; n < h.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            e[n] += h[k] * alt_sign(n - k) * h[n - k];
        }
    }
    return e;
}

IntSeq even_subsequence(const IntSeq& e) {
    IntSeq out;
    for (std::size_t i = 0; i < e.size(); i += 2) out.push_back(e[i]);
    return out;
}

GridCheckReport check_101_impossible(std::int64_t sample_bound) {
    if (sample_bound < 2) throw Error("check_101_impossible: sample bound must be >= 2");
    GridCheckReport rep;
    for (std::int64_t beta = -sample_bound; beta <= sample_bound; ++beta) {
        for (std::int64_t delta = -sample_bound; delta <= sample_bound; ++delta) {
            for (std::int64_t eps = -sample_bound; eps <= sample_bound; ++eps) {
                IntSeq a{Int(1), Int(beta), Int(beta) * beta, Int(delta), Int(eps)};
                Int h1 = det_exact(hankel_matrix(a, 1, 0));
                Int h2 = det_exact(hankel_matrix(a, 2, 0));
                Int d = Int(delta) - Int(beta) * beta * beta;
                ++rep.cases;
                if (h1 != 0 || h2 != -(d * d)) {
                    rep.passed = false;
                    rep.detail = "identity failed at beta=" + std::to_string(beta) +
                                 " delta=" + std::to_string(delta) +
                                 " eps=" + std::to_string(eps);
                    return rep;
                }
            }
        }
    }
    rep.passed = true;
    rep.detail = "h_1 = 0 and h_2 = -(delta-beta^3)^2 at all " + std::to_string(rep.cases) +
                 " grid points; h_2 <= 0, so no integer or real sequence has a Hankel "
                 "transform beginning 1,0,1";
    return rep;
}

}  // namespace hlab
