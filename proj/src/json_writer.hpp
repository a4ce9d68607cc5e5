#pragma once

#include <string>

#include "json.hpp"

namespace hgspec::detail {

using Json = nlohmann::ordered_json;

// Two-space indented dump; floating-point values use %.17g and non-finite
// values become null. nlohmann's own dump prints the shortest round-trip
// form, which is not a fixed digit count.
std::string dump_json(const Json& j);

}  // namespace hgspec::detail
