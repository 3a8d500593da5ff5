#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hankel_lab/bigint.hpp"
#include "hankel_lab/contfrac.hpp"

namespace hlab {

// A registered sequence rule. Everything is embedded and offline; OEIS
// A-numbers appear in descriptions as documentation only.
struct NamedRule {
    std::string name;
    std::string kind;         // "terms" | "pattern" | "cf-powers" | "sign-cycle"
    std::string description;
    std::function<IntSeq(int)> terms;  // values 0..N (for cf-powers: the powers)
    bool has_cf = false;               // kind == "cf-powers"
};

// A registered cross-check: two independent routes to the same expansion,
// compared mod x^{N+1}.
struct IdentityRule {
    std::string name;
    std::string description;
    std::function<bool(int)> check;
};

// Gap-transform template powers 1, r, r+1, 2, 2, 2, ...
PowerFn gap_template_powers(std::int64_t r);
CfSpec gap_template(std::int64_t r);

class Catalog {
public:
    static const Catalog& instance();

    const std::vector<NamedRule>& entries() const { return entries_; }
    const std::vector<IdentityRule>& identities() const { return identities_; }

    // Throws UnknownName. Accepts "gap_template(5)" / "gap_template(r=5)" in
    // named_terms/cf_spec/power_rule but not in find (those are synthesized).
    const NamedRule& find(const std::string& name) const;

    IntSeq named_terms(const std::string& name, int order) const;

    // Infinite power rule for a cf-powers entry.
    PowerFn power_rule(const std::string& name) const;
    CfSpec cf_spec(const std::string& name) const;

    bool gf_identity_check(const std::string& name, int order) const;

private:
    Catalog();
    std::vector<NamedRule> entries_;
    std::vector<IdentityRule> identities_;
};

}  // namespace hlab
