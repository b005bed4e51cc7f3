#include "search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <numeric>

#include "analytics.hpp"
#include "depth.hpp"
#include "errors.hpp"

namespace boxhelly {

namespace {

using IntervalPattern = std::vector<std::pair<int, int>>;  // (lo, hi) positions, lo < hi

// All matchings of positions 1..2n into n (lo, hi) pairs, lo < hi: the
// canonical order types of n intervals with distinct endpoints. Intervals
// come out sorted by lo, so the first position is always a lo.
std::vector<IntervalPattern> interval_order_types(int n) {
    std::vector<IntervalPattern> out;
    IntervalPattern current;
    std::vector<bool> used(static_cast<std::size_t>(2 * n) + 1, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == n) {
            out.push_back(current);
            return;
        }
        int lo = 1;
        while (used[static_cast<std::size_t>(lo)]) ++lo;
        used[static_cast<std::size_t>(lo)] = true;
        for (int hi = lo + 1; hi <= 2 * n; ++hi) {
            if (used[static_cast<std::size_t>(hi)]) continue;
            used[static_cast<std::size_t>(hi)] = true;
            current.emplace_back(lo, hi);
            self(self);
            current.pop_back();
            used[static_cast<std::size_t>(hi)] = false;
        }
        used[static_cast<std::size_t>(lo)] = false;
    };
    rec(rec);
    return out;
}

// Depth of a partial family of closed intervals with distinct endpoints:
// the pointwise maximum is attained at an endpoint position.
int pattern_depth(const IntervalPattern& intervals, int positions) {
    int best = 0;
    for (int p = 1; p <= positions; ++p) {
        int c = 0;
        for (const auto& [lo, hi] : intervals) {
            if (lo <= p && p <= hi) ++c;
        }
        best = std::max(best, c);
    }
    return best;
}

int pattern_pairs(const IntervalPattern& intervals) {
    int pairs = 0;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        for (std::size_t j = i + 1; j < intervals.size(); ++j) {
            if (intervals[i].first <= intervals[j].second &&
                intervals[j].first <= intervals[i].second) {
                ++pairs;
            }
        }
    }
    return pairs;
}

BoxFamily pattern_to_family(const std::vector<IntervalPattern>& per_axis, std::int64_t n,
                            std::int64_t k, std::int64_t d, const std::string& label) {
    BoxFamily family(static_cast<int>(d), {}, label);
    for (std::int64_t j = 0; j < n; ++j) {
        std::vector<Interval> intervals;
        intervals.reserve(static_cast<std::size_t>(d));
        for (std::int64_t ax = 0; ax < d; ++ax) {
            const auto& [lo, hi] = per_axis[static_cast<std::size_t>(ax)][static_cast<std::size_t>(j)];
            intervals.push_back(Interval::closed(Rational(lo), Rational(hi)));
        }
        family.add(Box(std::move(intervals)));
    }
    (void)k;
    return family;
}

// Unordered-pair bit index for i < j over n vertices.
int pair_bit(int i, int j, int n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Post-hoc check of a returned maximizer against the full-precision depth
// and pair machinery (the enumeration itself runs on compact encodings).
void revalidate_witness(const SearchResult& result, std::int64_t k) {
    if (max_depth(result.witness).depth > k) {
        throw Error("search witness failed depth revalidation");
    }
    if (count_pairs_naive(result.witness).pairs != result.max_pairs) {
        throw Error("search witness pair count mismatch");
    }
}

}  // namespace

SearchResult search_extremal_1d(std::int64_t n, std::int64_t k) {
    if (n < 1 || n > 7) {
        throw LimitExceeded("search_extremal_1d handles 1 <= n <= 7, got n=" + std::to_string(n));
    }
    if (k < 1 || k > n) {
        throw InvalidArgument("search_extremal_1d requires 1 <= k <= n");
    }

    const int in = static_cast<int>(n);
    const int ik = static_cast<int>(k);
    int best = -1;
    IntervalPattern best_pattern;

    IntervalPattern current;
    std::vector<bool> used(static_cast<std::size_t>(2 * in) + 1, false);
    // Same matching recursion as interval_order_types, pruned on partial
    // depth: adding intervals never lowers the depth, so any prefix already
    // deeper than k is dead.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == in) {
            int pairs = pattern_pairs(current);
            if (pairs > best) {
                best = pairs;
                best_pattern = current;
            }
            return;
        }
        int lo = 1;
        while (used[static_cast<std::size_t>(lo)]) ++lo;
        used[static_cast<std::size_t>(lo)] = true;
        for (int hi = lo + 1; hi <= 2 * in; ++hi) {
            if (used[static_cast<std::size_t>(hi)]) continue;
            used[static_cast<std::size_t>(hi)] = true;
            current.emplace_back(lo, hi);
            if (pattern_depth(current, 2 * in) <= ik) self(self);
            current.pop_back();
            used[static_cast<std::size_t>(hi)] = false;
        }
        used[static_cast<std::size_t>(lo)] = false;
    };
    rec(rec);
    assert(best >= 0);

    SearchResult result{best,
                        pattern_to_family({best_pattern}, n, k, 1,
                                          "search(n=" + std::to_string(n) +
                                              ",k=" + std::to_string(k) + ",d=1)")};
    revalidate_witness(result, k);
    return result;
}

SearchResult search_extremal_d(std::int64_t n, std::int64_t k, std::int64_t d) {
    if (d != 2 && d != 3) {
        throw InvalidArgument("search_extremal_d handles d in {2, 3}, got d=" + std::to_string(d));
    }
    if (n < 1 || n > 4) {
        throw LimitExceeded("search_extremal_d handles 1 <= n <= 4, got n=" + std::to_string(n));
    }
    if (k < 1 || k > n) {
        throw InvalidArgument("search_extremal_d requires 1 <= k <= n");
    }

    const int in = static_cast<int>(n);
    const int pair_bits = in * (in - 1) / 2;
    const std::vector<IntervalPattern> canonical = interval_order_types(in);

    auto adjacency_mask = [&](const IntervalPattern& p) -> std::uint32_t {
        std::uint32_t mask = 0;
        for (int i = 0; i < in; ++i) {
            for (int j = i + 1; j < in; ++j) {
                if (p[static_cast<std::size_t>(i)].first <= p[static_cast<std::size_t>(j)].second &&
                    p[static_cast<std::size_t>(j)].first <= p[static_cast<std::size_t>(i)].second) {
                    mask |= std::uint32_t{1} << pair_bit(i, j, in);
                }
            }
        }
        return mask;
    };

    // Boxes are axis-decomposable: the box intersection mask is the AND of
    // the per-axis interval masks, and boxes have Helly number 2, so the
    // depth cap is exactly a clique-number cap on that mask.
    std::vector<int> clique_of_mask(std::size_t{1} << pair_bits, 0);
    for (std::uint32_t mask = 0; mask < clique_of_mask.size(); ++mask) {
        int best = in > 0 ? 1 : 0;
        for (int subset = 1; subset < (1 << in); ++subset) {
            bool clique = true;
            for (int i = 0; i < in && clique; ++i) {
                if (!(subset >> i & 1)) continue;
                for (int j = i + 1; j < in && clique; ++j) {
                    if ((subset >> j & 1) && !(mask >> pair_bit(i, j, in) & 1)) clique = false;
                }
            }
            if (clique) best = std::max(best, std::popcount(static_cast<unsigned>(subset)));
        }
        clique_of_mask[mask] = best;
    }

    // Axis 1 keeps the canonical labeling (a global relabeling of boxes can
    // always sort axis-1 intervals by lo); the other axes range over every
    // labeled order type.
    struct Labeled {
        IntervalPattern intervals;
        std::uint32_t mask;
    };
    std::vector<Labeled> labeled;
    {
        std::vector<int> perm(static_cast<std::size_t>(in));
        for (const IntervalPattern& p : canonical) {
            std::iota(perm.begin(), perm.end(), 0);
            do {
                IntervalPattern lp(static_cast<std::size_t>(in));
                for (int j = 0; j < in; ++j) {
                    lp[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
                }
                labeled.push_back({lp, adjacency_mask(lp)});
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    int best = -1;
    std::array<std::size_t, 3> best_idx{};  // axis-1 canonical index, then labeled indices
    for (std::size_t a0 = 0; a0 < canonical.size(); ++a0) {
        const std::uint32_t m0 = adjacency_mask(canonical[a0]);
        for (std::size_t a1 = 0; a1 < labeled.size(); ++a1) {
            const std::uint32_t m01 = m0 & labeled[a1].mask;
            if (d == 2) {
                if (clique_of_mask[m01] <= k) {
                    const int pairs = std::popcount(m01);
                    if (pairs > best) {
                        best = pairs;
                        best_idx = {a0, a1, 0};
                    }
                }
                continue;
            }
            for (std::size_t a2 = 0; a2 < labeled.size(); ++a2) {
                const std::uint32_t m = m01 & labeled[a2].mask;
                if (clique_of_mask[m] > k) continue;
                const int pairs = std::popcount(m);
                if (pairs > best) {
                    best = pairs;
                    best_idx = {a0, a1, a2};
                }
            }
        }
    }
    assert(best >= 0);

    std::vector<IntervalPattern> per_axis{canonical[best_idx[0]], labeled[best_idx[1]].intervals};
    if (d == 3) per_axis.push_back(labeled[best_idx[2]].intervals);
    SearchResult result{best, pattern_to_family(per_axis, n, k, d,
                                                "search(n=" + std::to_string(n) + ",k=" +
                                                    std::to_string(k) + ",d=" +
                                                    std::to_string(d) + ")")};
    revalidate_witness(result, k);
    return result;
}

}  // namespace boxhelly
