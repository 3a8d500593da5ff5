#pragma once

#include <json.hpp>

#include "hankel_lab/analysis.hpp"
#include "hankel_lab/bigint.hpp"
#include "hankel_lab/hankel.hpp"

namespace hlab {

// All JSON report shapes carry this version.
inline constexpr int kSchemaVersion = 1;

// Arbitrary-precision values are serialized as decimal strings so no consumer
// ever rounds them through a double.
nlohmann::json seq_json(const IntSeq& a);

nlohmann::json to_json(const HankelResult& h);
nlohmann::json to_json(const ConjectureReport& rep);
nlohmann::json to_json(const GridCheckReport& rep);

}  // namespace hlab
