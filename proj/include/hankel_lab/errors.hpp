#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlab {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series inversion / rational expansion requires |constant term| == 1.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

// Fixed-point iteration did not stabilize within the allowed iteration count.
struct NoConvergence : Error {
    using Error::Error;
};

// A continued-fraction power p_k < 1 (or otherwise unusable) was requested.
struct InvalidPower : Error {
    using Error::Error;
};

// A finite power list was exhausted before the required truncation depth.
struct InsufficientPowers : InvalidPower {
    using InvalidPower::InvalidPower;
};

// Not enough sequence terms to build the requested Hankel matrix/transform.
struct InsufficientTerms : Error {
    using Error::Error;
};

// An internal exact division left a remainder. Always a bug, never input-dependent.
struct InternalExactnessViolation : Error {
    using Error::Error;
};

// A CF power sequence violates p_0 = 1 or p_k >= 1.
struct InvalidPowerSeq : Error {
    using Error::Error;
};

// A pattern sequence violates b_0 = 0 or b_1 >= 1.
struct InvalidPattern : Error {
    using Error::Error;
};

// A pattern demands a nonpositive CF power; `index` names the first bad position.
struct NotRepresentable : Error {
    std::size_t index;
    NotRepresentable(std::size_t idx, const std::string& what) : Error(what), index(idx) {}
};

// Catalog lookup failed.
struct UnknownName : Error {
    using Error::Error;
};

// A closed-form term rule produced a non-integer value.
struct InexactDivision : Error {
    using Error::Error;
};

// gf_transform requires a_0 != 0.
struct ZeroConstantTerm : Error {
    using Error::Error;
};

}  // namespace hlab
