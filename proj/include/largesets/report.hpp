#pragma once

#include <string>

#include <json.hpp>

#include "largesets/fin_set.hpp"
#include "largesets/ordinal.hpp"
#include "largesets/rng.hpp"

namespace largesets {

using Json = nlohmann::ordered_json;  // insertion order => byte-stable dumps

/// Common report envelope. Every machine-readable report starts with the
/// tool name and the RNG algorithm identifier so a run is reproducible
/// from its output alone.
Json report_header(const std::string& command);

Json to_json(const FinSet& s);

/// [[exponent, coefficient], ...] with descending exponents.
Json to_json(const Ordinal& a);
Ordinal ordinal_from_json(const Json& j);

}  // namespace largesets
