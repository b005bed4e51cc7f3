#include "depth.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <limits>

#include "bitset.hpp"
#include "errors.hpp"

namespace boxhelly {

namespace {

// One arrangement cell of a single axis: an endpoint value or an open gap
// between consecutive values, with a representative coordinate and the set
// of boxes whose projection covers the cell.
struct Atom {
    Rational rep;
    Bitset members;
};

// Candidate cells per axis, in increasing coordinate order. Of the full
// arrangement (endpoint values and the open gaps between them; the
// unbounded end gaps never hold members) it suffices to keep, for each
// distinct upper endpoint value u, the value atom at u and the gap atom
// immediately left of u: sliding a deepest point rightward to the minimal
// upper endpoint u of its members lands it either on u (when u stays
// inside every member) or anywhere in the gap just below u (when some
// member is open at u), without leaving any member.
std::vector<Atom> axis_atoms(const BoxFamily& f, int axis) {
    const std::size_t n = f.size();
    std::vector<Rational> values, uppers;
    values.reserve(n * 2);
    uppers.reserve(n);
    for (const Box& b : f.boxes()) {
        values.push_back(b.axis(axis).lo().value);
        values.push_back(b.axis(axis).hi().value);
        uppers.push_back(b.axis(axis).hi().value);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::sort(uppers.begin(), uppers.end());
    uppers.erase(std::unique(uppers.begin(), uppers.end()), uppers.end());

    std::vector<Atom> atoms;
    auto push_atom = [&](const Rational& rep) {
        Atom atom{rep, Bitset(n)};
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (f.box(i).axis(axis).contains(rep)) {
                atom.members.set(i);
                ++cnt;
            }
        }
        if (cnt > 0) atoms.push_back(std::move(atom));
    };

    for (const Rational& u : uppers) {
        const auto pos = std::lower_bound(values.begin(), values.end(), u) - values.begin();
        if (pos > 0) {
            push_atom((values[static_cast<std::size_t>(pos - 1)] + u) / Rational(2));
        }
        push_atom(u);
    }
    return atoms;
}

}  // namespace

DepthWitness max_depth_1d(std::span<const Interval> intervals) {
    if (intervals.empty()) throw EmptyFamily("max_depth_1d of empty list");

    struct Event {
        Bound key;
        bool end;
    };
    std::vector<Event> events;
    events.reserve(intervals.size() * 2);
    std::vector<Rational> values;
    values.reserve(intervals.size() * 2);
    for (const Interval& iv : intervals) {
        events.push_back({Bound::lower(iv.lo()), false});
        events.push_back({Bound::upper(iv.hi()), true});
        values.push_back(iv.lo().value);
        values.push_back(iv.hi().value);
    }
    // Starts before ends at equal keys: an upper bound equal to a lower bound
    // in the boundary order means the two intervals share a point.
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.end < b.end;
    });
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::int64_t active = 0, best = 0;
    Bound best_key;
    for (const Event& ev : events) {
        if (ev.end) {
            --active;
        } else if (++active > best) {
            best = active;
            best_key = ev.key;
        }
    }

    DepthWitness w;
    w.depth = best;
    if (best_key.tier == 0) {
        w.point.coords.push_back(best_key.value);
    } else {
        // Open lower bound: the peak lives strictly between this value and
        // the next endpoint value; every active interval spans that gap.
        auto next = std::upper_bound(values.begin(), values.end(), best_key.value);
        assert(next != values.end());
        w.point.coords.push_back((best_key.value + *next) / Rational(2));
    }
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (intervals[i].contains(w.point.coords[0])) {
            w.members.push_back(static_cast<std::int32_t>(i));
        }
    }
    if (static_cast<std::int64_t>(w.members.size()) != w.depth) {
        throw Error("max_depth_1d: witness membership disagrees with sweep count");
    }
    return w;
}

DepthWitness max_depth(const BoxFamily& f) {
    const std::size_t n = f.size();
    if (n == 0) throw EmptyFamily("max_depth of empty family");
    const int dim = f.dim();

    std::vector<std::vector<Atom>> axes;
    axes.reserve(static_cast<std::size_t>(dim));
    for (int ax = 0; ax < dim; ++ax) axes.push_back(axis_atoms(f, ax));

    // Seed the pruning bound with the per-axis stab point: a real point's
    // depth is a valid lower bound on the maximum, and starting the scan at
    // seed-1 still returns the first maximal atom combination in scan order.
    RPoint seed;
    for (int ax = 0; ax < dim; ++ax) {
        std::vector<Interval> proj;
        proj.reserve(n);
        for (const Box& b : f.boxes()) proj.push_back(b.axis(ax));
        seed.coords.push_back(max_depth_1d(proj).point.coords[0]);
    }
    std::int64_t seed_depth = 0;
    for (const Box& b : f.boxes()) {
        if (point_in_box(seed, b)) ++seed_depth;
    }

    // Remaining-axis cap: no combination through axes i..d-1 can exceed the
    // smallest per-axis maximum membership.
    std::vector<std::size_t> sufcap(static_cast<std::size_t>(dim) + 1,
                                    std::numeric_limits<std::size_t>::max());
    for (int ax = dim - 1; ax >= 0; --ax) {
        std::size_t axmax = 0;
        for (const Atom& a : axes[static_cast<std::size_t>(ax)]) {
            axmax = std::max(axmax, a.members.count());
        }
        sufcap[static_cast<std::size_t>(ax)] =
            std::min(axmax, sufcap[static_cast<std::size_t>(ax) + 1]);
    }

    std::int64_t best = std::max<std::int64_t>(seed_depth, 1) - 1;
    std::vector<Rational> reps(static_cast<std::size_t>(dim), Rational(0));
    std::vector<Rational> best_reps;
    Bitset best_set(n);
    bool found = false;

    std::vector<Bitset> scratch(static_cast<std::size_t>(dim), Bitset(n));
    const Bitset all = Bitset::ones(n);

    auto scan = [&](auto&& self, int ax) -> void {
        const Bitset& running = ax == 0 ? all : scratch[static_cast<std::size_t>(ax) - 1];
        for (const Atom& atom : axes[static_cast<std::size_t>(ax)]) {
            std::size_t c =
                scratch[static_cast<std::size_t>(ax)].assign_and_count(running, atom.members);
            if (static_cast<std::int64_t>(c) <= best) continue;
            if (ax + 1 < dim &&
                sufcap[static_cast<std::size_t>(ax) + 1] <= static_cast<std::size_t>(best)) {
                return;  // no deeper axis can reach past best at all
            }
            reps[static_cast<std::size_t>(ax)] = atom.rep;
            if (ax + 1 == dim) {
                best = static_cast<std::int64_t>(c);
                best_reps = reps;
                best_set = scratch[static_cast<std::size_t>(ax)];
                found = true;
            } else {
                self(self, ax + 1);
            }
        }
    };
    scan(scan, 0);

    // Every box covers at least one atom combination, so the scan always
    // lands on a witness for n >= 1.
    if (!found) throw Error("max_depth: atom scan produced no witness");

    DepthWitness w;
    w.depth = best;
    w.point.coords = std::move(best_reps);
    w.members = best_set.to_indices();
    return w;
}

std::int64_t max_clique_bruteforce(const BoxFamily& f, std::size_t limit) {
    if (limit > 63) throw InvalidArgument("max_clique_bruteforce limit capped at 63");
    const std::size_t n = f.size();
    if (n > limit) {
        throw LimitExceeded("max_clique_bruteforce: family of " + std::to_string(n) +
                            " boxes exceeds limit " + std::to_string(limit));
    }
    if (n == 0) return 0;

    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (boxes_intersect(f.box(i), f.box(j))) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    }

    std::int64_t best = 0;
    std::function<void(std::uint64_t, std::int64_t)> grow = [&](std::uint64_t cand,
                                                                std::int64_t size) {
        best = std::max(best, size);
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            grow(cand & adj[static_cast<std::size_t>(v)], size + 1);
        }
    };
    grow(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
    return best;
}

}  // namespace boxhelly
