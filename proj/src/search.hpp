#pragma once

#include <cstdint>

#include "geometry.hpp"

namespace boxhelly {

struct SearchResult {
    std::int64_t max_pairs = 0;
    BoxFamily witness;
};

// Exhaustive maximum over all order types of n closed intervals with
// distinct endpoints 1..2n (every matching of the positions into lo < hi
// pairs), keeping only families of depth <= k. Independent oracle for the
// exact one-dimensional formula. n is capped at 7 ((2n-1)!! blowup).
SearchResult search_extremal_1d(std::int64_t n, std::int64_t k);

// Per-axis product of one-dimensional order types, depth-filtered; a
// certified lower bound on the d-dimensional maximum. d in {2, 3}, n <= 4.
SearchResult search_extremal_d(std::int64_t n, std::int64_t k, std::int64_t d);

}  // namespace boxhelly
