#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geometry.hpp"

namespace boxhelly {

// A point of maximum depth together with the boxes containing it.
struct DepthWitness {
    RPoint point;
    std::int64_t depth = 0;
    std::vector<std::int32_t> members;  // sorted box indices, size == depth

    friend bool operator==(const DepthWitness&, const DepthWitness&) = default;
};

// Maximum depth over all of R^d with a witness point. Per-axis coordinate
// compression into arrangement atoms, restricted to the cells a deepest
// point can always be slid into (each upper endpoint value and the gap
// just left of it), then a depth-first scan over atom combinations with
// bitset intersection and popcount pruning. Ties resolve to the first
// atom combination in scan order. Throws EmptyFamily for n = 0.
DepthWitness max_depth(const BoxFamily& f);

// Same contract restricted to one dimension, by an endpoint-event sweep.
// The witness point is the earliest position at which the active count
// peaks (an endpoint value, or the midpoint of the following gap).
DepthWitness max_depth_1d(std::span<const Interval> intervals);

// Largest pairwise-intersecting subset, by branch-and-bound over subsets of
// the intersection graph. Test oracle for the depth == clique-number fact;
// refuses families above `limit`.
std::int64_t max_clique_bruteforce(const BoxFamily& f, std::size_t limit = 16);

}  // namespace boxhelly
