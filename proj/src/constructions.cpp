#include "constructions.hpp"

#include <string>

#include "errors.hpp"

namespace boxhelly {

namespace {

constexpr std::int64_t kGrid = 1 << 20;

// splitmix64: fixed standalone stream, independent of the standard library's
// distribution implementations, so generated families are portable.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from {0, ..., bound} inclusive.
    std::int64_t below(std::int64_t bound) {
        return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(bound + 1));
    }
};

std::int64_t grid_floor(const Rational& r) { return (r * Rational(kGrid)).floor(); }
std::int64_t grid_ceil(const Rational& r) { return (r * Rational(kGrid)).ceil(); }

}  // namespace

BoxFamily gen_turan_family(std::int64_t n, std::int64_t d) {
    if (d < 1 || n < d) {
        throw InvalidArgument("gen_turan_family requires n >= d >= 1, got n=" +
                              std::to_string(n) + " d=" + std::to_string(d));
    }
    const std::int64_t rem = n % d;
    const std::int64_t hi_size = (n + d - 1) / d;  // ceil(n/d)
    const std::int64_t lo_size = n / d;
    const Rational ambient_hi(hi_size);

    BoxFamily family(static_cast<int>(d), {},
                     "turan(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")");
    for (std::int64_t cls = 0; cls < d; ++cls) {
        const std::int64_t size = cls < rem ? hi_size : lo_size;
        for (std::int64_t j = 1; j <= size; ++j) {
            std::vector<Interval> intervals;
            intervals.reserve(static_cast<std::size_t>(d));
            for (std::int64_t ax = 0; ax < d; ++ax) {
                if (ax == cls) {
                    intervals.push_back(Interval::open(Rational(j - 1), Rational(j)));
                } else {
                    intervals.push_back(Interval::open(Rational(0), ambient_hi));
                }
            }
            family.add(Box(std::move(intervals)));
        }
    }
    return family;
}

BoxFamily gen_staircase_family(std::int64_t n, std::int64_t k) {
    if (k < 1 || k > n) {
        throw InvalidArgument("gen_staircase_family requires 1 <= k <= n, got n=" +
                              std::to_string(n) + " k=" + std::to_string(k));
    }
    BoxFamily family(1, {},
                     "staircase(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
    for (std::int64_t i = 1; i <= n; ++i) {
        family.add(Box({Interval::open(Rational(i), Rational(i + k))}));
    }
    return family;
}

BoxFamily gen_random_family(std::int64_t n, std::int64_t d, std::uint64_t seed,
                            const RandomFamilyParams& params) {
    if (n < 0 || d < 1) {
        throw InvalidArgument("gen_random_family requires n >= 0 and d >= 1");
    }
    if (!(Rational(0) < params.side_min && params.side_min <= params.side_max &&
          params.side_max <= params.extent)) {
        throw InvalidArgument("gen_random_family requires 0 < side_min <= side_max <= extent");
    }
    const std::int64_t center_steps = grid_floor(params.extent);
    const std::int64_t len_lo = grid_ceil(params.side_min);
    const std::int64_t len_hi = grid_floor(params.side_max);
    if (len_lo > len_hi) {
        throw InvalidArgument("gen_random_family: side range collapses on the 2^-20 grid");
    }

    SplitMix64 rng(seed);
    BoxFamily family(static_cast<int>(d), {},
                     "random(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                         ",seed=" + std::to_string(seed) + ")");
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<Interval> intervals;
        intervals.reserve(static_cast<std::size_t>(d));
        for (std::int64_t ax = 0; ax < d; ++ax) {
            const std::int64_t center = rng.below(center_steps);
            const std::int64_t len = len_lo + rng.below(len_hi - len_lo);
            const std::int64_t lo = center - len / 2;
            intervals.push_back(Interval({Rational(lo, kGrid), !params.closed},
                                         {Rational(lo + len, kGrid), !params.closed}));
        }
        family.add(Box(std::move(intervals)));
    }
    return family;
}

}  // namespace boxhelly
