#include "hankel_lab/contfrac.hpp"

#include <string>
#include <utility>

#include "hankel_lab/errors.hpp"
#include "hankel_lab/power_series.hpp"

namespace hlab {

PowerFn power_list(std::vector<std::int64_t> p) {
    return [p = std::move(p)](std::size_t k) -> std::int64_t {
        if (k >= p.size()) {
            throw InsufficientPowers("power list exhausted: level " + std::to_string(k) +
                                     " requested, " + std::to_string(p.size()) + " given");
        }
        if (p[k] < 1) {
            throw InvalidPower("p_" + std::to_string(k) + " = " + std::to_string(p[k]) +
                               " < 1");
        }
        return p[k];
    };
}

CfSpec CfSpec::from_powers(std::vector<std::int64_t> p, std::vector<int> signs) {
    return CfSpec{power_list(std::move(p)), std::move(signs)};
}

CfSpec CfSpec::from_rule(PowerFn rule, std::vector<int> signs) {
    return CfSpec{std::move(rule), std::move(signs)};
}

std::size_t required_depth(const PowerFn& powers, int order) {
    std::int64_t sum = 0;
    std::size_t level = 0;
    while (sum <= order) {
        std::int64_t p = powers(level);
        if (p < 1) {
            throw InvalidPower("p_" + std::to_string(level) + " = " + std::to_string(p) + " < 1");
        }
        sum += p;
        ++level;
    }
    return level;
}

IntSeq cf_expand_with_depth(const CfSpec& spec, int order, std::size_t depth) {
    PowerSeries u = PowerSeries::one(order);  // tail seed
    for (std::size_t level = depth; level-- > 0;) {
        std::int64_t p = spec.powers(level);
        if (p < 1) {
            throw InvalidPower("p_" + std::to_string(level) + " = " + std::to_string(p) + " < 1");
        }
        PowerSeries term = mul(PowerSeries::monomial(static_cast<std::size_t>(p), order), u, order);
        PowerSeries denom = spec.sign(level) < 0 ? sub(PowerSeries::one(order), term)
                                                 : add(PowerSeries::one(order), term);
        u = inverse(denom, order);
    }
    return u.terms();
}

IntSeq cf_expand(const CfSpec& spec, int order) {
    return cf_expand_with_depth(spec, order, required_depth(spec.powers, order));
}

}  // namespace hlab
