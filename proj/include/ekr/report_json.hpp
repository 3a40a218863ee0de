#pragma once

#include <json.hpp>
#include <string>

#include "ekr/ekr.hpp"
#include "ekr/lab.hpp"

namespace ekr {

using Json = nlohmann::ordered_json;

/// Members as "0x..." masks in canonical order.
Json family_to_json(const SetFamily& f);

/// Report without the spec field; `millis` only when `timing` is set, so equal
/// inputs serialise to equal bytes.
Json report_to_json(const EkrReport& rep, bool timing);

/// `unexpected` is the number of violations the caller did not expect.
Json scan_to_json(const ScanResult& res, std::size_t unexpected, bool timing);

/// Inserts {"spec": spec} as the first member.
Json with_spec(const std::string& spec, const Json& body);

/// Plain-text rendering: scalars as "key: value", arrays of objects as
/// aligned rows.
std::string render_table(const Json& j);

}  // namespace ekr
