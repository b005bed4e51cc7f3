#pragma once

#include <cstdint>

#include "geometry.hpp"

namespace boxhelly {

// Family whose intersection graph is the balanced complete d-partite graph
// on n vertices: per axis i, the ambient open cube (0, ceil(n/d))^d is cut
// into unit-width open slabs, and class-i boxes are the cube clipped to one
// slab each. Boxes are ordered class by class. Requires n >= d >= 1.
BoxFamily gen_turan_family(std::int64_t n, std::int64_t d);

// One-dimensional family of the open intervals (i, i+k), i = 1..n.
// Has (k-1)n - C(k,2) intersecting pairs and depth k. Requires 1 <= k <= n.
BoxFamily gen_staircase_family(std::int64_t n, std::int64_t k);

struct RandomFamilyParams {
    Rational extent{10};
    Rational side_min{1};
    Rational side_max{5};
    bool closed = false;
};

// Seeded random family: per axis, the interval center is uniform on
// [0, extent] and the side length uniform on [side_min, side_max], both
// snapped to the 2^-20 grid so identical inputs reproduce identical
// families bit for bit. Requires 0 < side_min <= side_max <= extent.
BoxFamily gen_random_family(std::int64_t n, std::int64_t d, std::uint64_t seed,
                            const RandomFamilyParams& params = {});

}  // namespace boxhelly
