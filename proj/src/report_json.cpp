#include "hankel_lab/report_json.hpp"

namespace hlab {

using nlohmann::json;

json seq_json(const IntSeq& a) {
    json arr = json::array();
    for (const Int& v : a) arr.push_back(v.str());
    return arr;
}

json to_json(const HankelResult& h) {
    return json{{"shift", h.shift},
                {"values", seq_json(h.values)},
                {"support", h.support},
                {"in_unit_set", h.in_unit_set}};
}

json to_json(const ConjectureReport& rep) {
    json mult = json::array();
    for (const auto& [value, count] : rep.multiplicity_table) {
        mult.push_back(json{{"value", value}, {"count", count}});
    }
    return json{
        {"schema_version", kSchemaVersion},
        {"source", json{{"kind", rep.source_kind},
                        {"values", rep.source_values},
                        {"signs", rep.signs}}},
        {"derived", json{{"kind", rep.source_kind == "powers" ? "pattern" : "powers"},
                         {"values", rep.source_kind == "powers" ? rep.pattern : rep.powers}}},
        {"powers", rep.powers},
        {"pattern", rep.pattern},
        {"depth", rep.depth},
        {"a_prefix_length", rep.a_prefix_length},
        {"a", seq_json(rep.a)},
        {"h", to_json(rep.h)},
        {"expected_support", rep.expected_support},
        {"observed_support", rep.observed_support},
        {"in_unit_set", rep.in_unit_set},
        {"support_match", rep.support_match},
        {"multiplicity_table", mult},
        {"nonzero_sign_sequence", rep.nonzero_sign_sequence},
        {"requested_order", rep.requested_order},
        {"window", rep.window},
        {"verdict", rep.verdict},
        {"verdict_reason", rep.verdict_reason},
    };
}

json to_json(const GridCheckReport& rep) {
    return json{{"schema_version", kSchemaVersion},
                {"passed", rep.passed},
                {"cases", rep.cases},
                {"detail", rep.detail}};
}

}  // namespace hlab
