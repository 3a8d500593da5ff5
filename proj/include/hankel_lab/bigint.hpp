#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "hankel_lab/errors.hpp"

namespace hlab {

// Exact arbitrary-precision integer. Everything in this library is computed
// over Z; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

// A finite sequence prefix a_0..a_N.
using IntSeq = std::vector<Int>;

// Exact quotient a / b. Throws InternalExactnessViolation if b does not divide a.
inline Int exact_div(const Int& a, const Int& b, const char* context) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) {
        throw InternalExactnessViolation(std::string(context) +
                                         ": inexact division " + a.str() + " / " + b.str());
    }
    return q;
}

// Like exact_div but reports InexactDivision (closed-form term rules, where a
// remainder means the registered formula is wrong, not the engine).
inline Int formula_div(const Int& a, const Int& b, const char* rule) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) {
        throw InexactDivision(std::string(rule) + ": " + a.str() + " not divisible by " + b.str());
    }
    return q;
}

inline Int pow2(unsigned n) {
    Int r = 1;
    return r << n;
}

// (-1)^n as an Int.
inline Int alt_sign(std::size_t n) { return (n % 2 == 0) ? Int(1) : Int(-1); }

// Renders a sequence as "a,b,c" (decimal, no spaces).
std::string seq_to_string(const IntSeq& s);

// Builds an IntSeq from machine integers (test and catalog convenience).
IntSeq seq_of(std::initializer_list<long long> values);

}  // namespace hlab
