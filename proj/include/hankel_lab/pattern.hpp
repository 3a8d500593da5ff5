#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hankel_lab/bigint.hpp"
#include "hankel_lab/hankel.hpp"

namespace hlab {

// CF power sequence prefix p_0..p_n with p_0 = 1 and p_k >= 1.
struct PowerSeq {
    std::vector<std::int64_t> p;
};

// Hankel pattern sequence prefix b_0..b_n. The conjecture's premise demands
// b_0 = 0, b_1 >= 1 and monotonicity; the struct itself does not enforce
// monotonicity (p_to_b of an arbitrary valid p can break it), validate_pattern
// reports it.
struct PatternSeq {
    std::vector<std::int64_t> b;
};

// Run-length encoding of b: (value, count) per run.
using MultiplicityTable = std::vector<std::pair<std::int64_t, std::size_t>>;

// Throws InvalidPowerSeq unless p_0 = 1 and every p_k >= 1.
void validate_power_seq(const PowerSeq& p);

// b_n = sum_{k=0..floor(n/2)} p_{n-2k}, minus 1 when n is even.
PatternSeq p_to_b(const PowerSeq& p);

// Inverse map: p_0 = 1, p_1 = b_1, p_2 = b_2, p_n = b_n - b_{n-2} for n >= 3.
// Throws InvalidPattern if b_0 != 0 or b_1 < 1, and NotRepresentable naming
// the first index where the derived power would drop below 1 (a value
// repeated three or more times always does).
PowerSeq b_to_p(const PatternSeq& b);

struct PatternVerdict {
    bool ok = false;
    std::vector<std::string> violations;  // among: b0, b1, monotonicity, derived-p positivity
};

PatternVerdict validate_pattern(const std::vector<std::int64_t>& b);

MultiplicityTable multiplicities(const PatternSeq& b);

// Generating-function forms of the map: true iff both
//   B(x) = P(x)/(1-x^2) - 1/(1-x^2)   and   P(x) = (1-x^2) B(x) + 1
// hold mod x^{N+1}. Requires both sequences longer than N.
bool gf_relation_check(const PowerSeq& p, const PatternSeq& b, int order);

inline std::vector<std::size_t> support_of(const HankelResult& h) { return h.support; }

}  // namespace hlab
