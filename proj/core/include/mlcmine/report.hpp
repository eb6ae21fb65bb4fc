#pragma once

#include <string>
#include <string_view>

#include "mlcmine/miner.hpp"

namespace mlcm {

/// Serializes a mining result to the JSON report format (schema_version 1):
/// run metadata, counters, and per-(level, k) itemset lists with dotted and
/// starred display codes. The format round-trips through report_from_json.
std::string report_to_json(const MiningResult& result, int indent = 2);

/// Parses a JSON report produced by report_to_json. Throws ParseError on
/// malformed or unsupported input.
MiningResult report_from_json(std::string_view json_text);

/// Flat CSV: `level,k,itemset,support,passes_constraint`, one row per
/// frequent itemset, with '+'-joined starred member codes.
std::string report_to_csv(const MiningResult& result);

}  // namespace mlcm
