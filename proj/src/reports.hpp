#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "geometry.hpp"
#include "rational.hpp"

namespace boxhelly {

// Pair statistics, degrees, max depth and its witness. with_edges adds the
// full intersecting-pair list.
nlohmann::ordered_json analyze_report(const BoxFamily& f, bool with_edges = false);

// Constructive deep point, the true optimum, per-axis miss counts, and the
// limit-theorem hypothesis/guarantee flags at the measured alpha.
nlohmann::ordered_json extract_report(const BoxFamily& f);

// Every bound evaluated at (n, k, d, measured alpha, eps) plus verdicts.
// When k is omitted it defaults to the measured depth, raised to d if the
// depth falls below the n >= k >= d parameter floor. any_fail is set when
// some theorem verdict is FAIL.
nlohmann::ordered_json verify_report(const BoxFamily& f, std::optional<std::int64_t> k,
                                     const std::optional<Rational>& eps, bool& any_fail);

// Exhaustive search outcome with the witness family inline.
nlohmann::ordered_json search_report(std::int64_t n, std::int64_t k, std::int64_t d);

}  // namespace boxhelly
