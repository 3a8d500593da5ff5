#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hankel_lab/bigint.hpp"
#include "hankel_lab/contfrac.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/pattern.hpp"

namespace hlab {

struct ConjectureSource {
    enum class Kind { Powers, Pattern };
    Kind kind = Kind::Powers;
    std::vector<std::int64_t> values;
    std::vector<int> sign_cycle;  // empty means all minus

    static ConjectureSource from_powers(std::vector<std::int64_t> p,
                                        std::vector<int> signs = {});
    static ConjectureSource from_pattern(std::vector<std::int64_t> b,
                                         std::vector<int> signs = {});
};

// Full record of one conjecture check. The claims are bounded by `window`:
// support is compared only on [0, window], while the unit-set condition is
// asserted for every Hankel value that was computable from the data.
struct ConjectureReport {
    std::string source_kind;  // "powers" | "pattern"
    std::vector<std::int64_t> source_values;
    std::string signs;  // rendered cycle, "-" for all minus
    std::vector<std::int64_t> powers;
    std::vector<std::int64_t> pattern;
    std::size_t depth = 0;
    std::size_t a_prefix_length = 0;
    IntSeq a;
    HankelResult h;
    std::vector<std::int64_t> expected_support;
    std::vector<std::int64_t> observed_support;
    bool in_unit_set = false;
    bool support_match = false;
    MultiplicityTable multiplicity_table;
    std::vector<int> nonzero_sign_sequence;
    int requested_order = 0;
    std::int64_t window = -1;
    std::string verdict;  // "PASS" | "FAIL" | "INCONCLUSIVE"
    std::string verdict_reason;
};

// Runs the pipeline source -> powers -> expansion (2N+1 terms when the data
// allows) -> Hankel transform -> support comparison against the distinct
// pattern values. Throws InvalidPattern / NotRepresentable / InvalidPowerSeq
// on invalid sources; requires N >= 2.
ConjectureReport check_conjecture(const ConjectureSource& source, int order);

// term n = sum_k C(n,k) r^{n-k} a_k; same Hankel transform as a.
IntSeq binomial_transform(const IntSeq& a, const Int& r);

// Coefficients of f/(1 - r x f) mod x^{N+1} where f is the g.f. of a.
// Requires a_0 != 0 (ZeroConstantTerm) and len(a) > N (InsufficientTerms).
IntSeq gf_transform(const IntSeq& a, const Int& r, int order);

// e_n = sum_{k=0..n} h_k (-1)^{n-k} h_{n-k}.
IntSeq eta_convolution(const IntSeq& h);

IntSeq even_subsequence(const IntSeq& e);

struct GridCheckReport {
    bool passed = false;
    std::uint64_t cases = 0;
    std::string detail;
};

// Sweeps integer (beta, delta, epsilon) over [-bound, bound]^3 with
// a = (1, beta, beta^2, delta, epsilon) and verifies h_1 = 0 and
// h_2 = -(delta - beta^3)^2 by exact determinant evaluation. Both sides
// have total degree <= 6, so agreement on the grid at bound >= 3 is a
// polynomial identity; h_2 <= 0 rules out any transform beginning 1,0,1.
GridCheckReport check_101_impossible(std::int64_t sample_bound);

std::string render_sign_cycle(const std::vector<int>& cycle);

}  // namespace hlab
