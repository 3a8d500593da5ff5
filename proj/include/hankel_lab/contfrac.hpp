#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hankel_lab/bigint.hpp"

namespace hlab {

// Supplies the CF power p_k for any level k. Implementations throw
// InsufficientPowers when a finite list runs out and InvalidPower for p_k < 1.
using PowerFn = std::function<std::int64_t(std::size_t)>;

// A continued fraction 1/(1 + s_0 x^{p_0}/(1 + s_1 x^{p_1}/(...))) with
// monomial numerators and per-level signs s_k in {+1,-1}. The sign cycle is
// repeated to the needed depth; an empty cycle means all minus.
struct CfSpec {
    PowerFn powers;
    std::vector<int> sign_cycle;

    int sign(std::size_t k) const {
        return sign_cycle.empty() ? -1 : sign_cycle[k % sign_cycle.size()];
    }

    static CfSpec from_powers(std::vector<std::int64_t> p, std::vector<int> signs = {});
    static CfSpec from_rule(PowerFn rule, std::vector<int> signs = {});
};

// Wraps a finite list as a PowerFn (validates p_k >= 1 on access).
PowerFn power_list(std::vector<std::int64_t> p);

// Minimal L with p_0 + ... + p_{L-1} > N. Replacing everything below level L
// by any unit series cannot change a_0..a_N: the tail enters the expansion at
// degree >= that partial sum, and the inequality is strict because degree
// exactly N would still corrupt a_N.
std::size_t required_depth(const PowerFn& powers, int order);

// Coefficients a_0..a_N of the continued fraction, computed bottom-up from
// the tail seed u_L = 1 at L = required_depth(powers, N).
IntSeq cf_expand(const CfSpec& spec, int order);

// Same, at an explicit depth >= required_depth (depth-stability testing).
IntSeq cf_expand_with_depth(const CfSpec& spec, int order, std::size_t depth);

}  // namespace hlab
