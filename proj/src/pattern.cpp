#include "hankel_lab/pattern.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/power_series.hpp"

namespace hlab {

void validate_power_seq(const PowerSeq& p) {
    if (p.p.empty()) throw InvalidPowerSeq("power sequence is empty");
    if (p.p[0] != 1) {
        throw InvalidPowerSeq("p_0 = " + std::to_string(p.p[0]) + ", must be 1");
    }
    for (std::size_t k = 1; k < p.p.size(); ++k) {
        if (p.p[k] < 1) {
            throw InvalidPowerSeq("p_" + std::to_string(k) + " = " + std::to_string(p.p[k]) +
                                  " < 1");
        }
    }
}

PatternSeq p_to_b(const PowerSeq& p) {
    validate_power_seq(p);
    // b_n = p_n + b_{n-2} with the parity correction folded into b_0, b_1.
    std::vector<std::int64_t> b(p.p.size());
    for (std::size_t n = 0; n < p.p.size(); ++n) {
        std::int64_t tail = n >= 2 ? b[n - 2] : (n % 2 == 0 ? -1 : 0);
        if (tail > 0 && p.p[n] > std::numeric_limits<std::int64_t>::max() - tail) {
            throw InvalidPowerSeq("pattern value overflows at index " + std::to_string(n));
        }
        b[n] = p.p[n] + tail;
    }
    return PatternSeq{std::move(b)};
}

PowerSeq b_to_p(const PatternSeq& b) {
    if (b.b.empty() || b.b[0] != 0) {
        throw InvalidPattern("b_0 must be 0");
    }
    if (b.b.size() < 2 || b.b[1] < 1) {
        throw InvalidPattern("b_1 must be >= 1");
    }
    std::vector<std::int64_t> p(b.b.size());
    p[0] = 1;
    for (std::size_t n = 1; n < b.b.size(); ++n) {
        p[n] = n < 3 ? b.b[n] : b.b[n] - b.b[n - 2];
        if (p[n] < 1) {
            throw NotRepresentable(n, "pattern needs CF power p_" + std::to_string(n) + " = " +
                                          std::to_string(p[n]) + " < 1 (b_" + std::to_string(n) +
                                          " - b_" + std::to_string(n - 2) + " < 1)");
        }
    }
    return PowerSeq{std::move(p)};
}

PatternVerdict validate_pattern(const std::vector<std::int64_t>& b) {
    PatternVerdict v;
    if (b.empty() || b[0] != 0) v.violations.push_back("b_0 must be 0");
    if (b.size() < 2 || b[1] < 1) v.violations.push_back("b_1 must be >= 1");
    for (std::size_t n = 1; n < b.size(); ++n) {
        if (b[n] < b[n - 1]) {
            v.violations.push_back("not non-decreasing at index " + std::to_string(n));
            break;
        }
    }
    for (std::size_t n = 3; n < b.size(); ++n) {
        if (b[n] - b[n - 2] < 1) {
            v.violations.push_back("derived CF power p_" + std::to_string(n) +
                                   " would be < 1 (multiplicity >= 3 is never representable)");
            break;
        }
    }
    v.ok = v.violations.empty();
    return v;
}

MultiplicityTable multiplicities(const PatternSeq& b) {
    MultiplicityTable t;
    for (std::int64_t v : b.b) {
        if (!t.empty() && t.back().first == v) {
            ++t.back().second;
        } else {
            t.emplace_back(v, 1);
        }
    }
    return t;
}

bool gf_relation_check(const PowerSeq& p, const PatternSeq& b, int order) {
    if (p.p.size() <= static_cast<std::size_t>(order) ||
        b.b.size() <= static_cast<std::size_t>(order)) {
        throw Error("gf_relation_check: sequences must be longer than the order");
    }
    IntSeq pc(p.p.begin(), p.p.begin() + order + 1);
    IntSeq bc(b.b.begin(), b.b.begin() + order + 1);
    PowerSeries P = PowerSeries::from_sequence(pc);
    PowerSeries B = PowerSeries::from_sequence(bc);
    Polynomial one_minus_x2{1, 0, -1};
    PowerSeries inv = inverse(PowerSeries::from_polynomial(one_minus_x2, order), order);
    PowerSeries one = PowerSeries::one(order);

    // B = P/(1-x^2) - 1/(1-x^2)
    bool rel_b = B == sub(mul(P, inv, order), inv);
    // P = (1-x^2) B + 1
    bool rel_p =
        P == add(mul(PowerSeries::from_polynomial(one_minus_x2, order), B, order), one);
    return rel_b && rel_p;
}

}  // namespace hlab
