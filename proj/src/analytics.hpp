#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace boxhelly {

// Intersection-graph statistics of a family. alpha is pairs / C(n,2),
// exact, and absent for n < 2 where the fraction is undefined.
struct PairReport {
    std::int64_t n = 0;
    std::int64_t pairs = 0;
    std::optional<Rational> alpha;
    std::vector<std::int64_t> degrees;

    friend bool operator==(const PairReport&, const PairReport&) = default;
};

// Pairwise test over all unordered pairs, any dimension. O(n^2 d).
PairReport count_pairs_naive(const BoxFamily& f);

// Endpoint-event sweep for d = 1, identical report in O(n log n).
PairReport count_pairs_sweep_1d(const BoxFamily& f);

// Sorted list of intersecting index pairs (i, j), i < j.
std::vector<std::pair<std::int32_t, std::int32_t>> edge_list(const BoxFamily& f);

}  // namespace boxhelly
