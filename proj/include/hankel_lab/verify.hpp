#pragma once

#include <string>
#include <vector>

#include "hankel_lab/bigint.hpp"
#include "hankel_lab/hankel.hpp"

namespace hlab {

struct CheckResult {
    std::string id;
    std::string label;
    bool pass = false;
    std::string detail;  // empty when clean, else the first mismatches found
};

// The full acceptance battery: every reference table frozen below is checked
// by recomputation from scratch. Deterministic, offline, order-stable.
std::vector<CheckResult> acceptance_battery();

// Cofactor-expansion determinant; the independent oracle for det_exact.
Int det_reference(const SquareMatrix& m);

// Randomized property suites with fixed seeds. Each returns true on success
// and appends diagnostics to detail otherwise.
bool roundtrip_suite(std::string& detail);
bool determinant_suite(std::string& detail);
bool invariance_suite(std::string& detail);
bool depth_stability_suite(std::string& detail);

}  // namespace hlab
