#pragma once

#include "histo/fekete.hpp"
#include "histo/lebesgue.hpp"
#include "histo/supports.hpp"

#include <json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace histo {

/// Shortest text with 17 significant digits, so doubles round-trip exactly.
[[nodiscard]] std::string format_double(double value);

/// {"supports": [[alpha, beta], ...], "class": "..."}, plus "rho"/"taus" for arc families.
[[nodiscard]] nlohmann::json to_json(const SupportSet& set);

/// Parses the format written by to_json(SupportSet). Throws std::invalid_argument.
[[nodiscard]] SupportSet support_set_from_json(const nlohmann::json& j);

/// {"r", "mode", "endpoints", "log_abs_det", "diagnostics", "set"}.
[[nodiscard]] nlohmann::json to_json(const FeketeResult& result);

/// Parses "a", "a:b" (step 1) or "a:b:s": starts at a, steps by s, never exceeds b.
/// Throws std::invalid_argument for malformed or empty ranges.
[[nodiscard]] std::vector<std::size_t> parse_range(std::string_view text);

/// CSV with header r,lebesgue,argmax_x,grid_size; failed rows carry empty values.
[[nodiscard]] std::string lebesgue_csv(std::span<const GrowthRow> rows);

}  // namespace histo
