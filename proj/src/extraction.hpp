#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "depth.hpp"
#include "geometry.hpp"

namespace boxhelly {

// Constructive deep point: stab each axis projection at its maximum-depth
// 1-D point and report the boxes containing the combined point, together
// with the per-axis miss counts |D_i| = n - (axis stab depth).
struct ExtractionResult {
    DepthWitness witness;
    std::vector<std::int64_t> axis_misses;
};

// The per-axis stabbing construction. When the measured pair fraction alpha
// exceeds 1 - 1/d^2, the witness depth reaches (1 - d sqrt(1-alpha)) n;
// below the threshold the point is still returned, without a guarantee.
// Throws EmptyFamily for n = 0.
DepthWitness extract_deep_point(const BoxFamily& f);

// extract_deep_point plus the per-axis miss-set sizes.
ExtractionResult extract_with_diagnostics(const BoxFamily& f);

// (constructive depth, true maximum depth); first <= second always.
std::pair<std::int64_t, std::int64_t> extraction_gap(const BoxFamily& f);

}  // namespace boxhelly
