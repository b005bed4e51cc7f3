#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "analytics.hpp"
#include "constructions.hpp"
#include "errors.hpp"

using namespace boxhelly;

namespace {

BoxFamily identical_boxes(std::int64_t n, int d) {
    BoxFamily f(d);
    std::vector<Interval> intervals(static_cast<std::size_t>(d), Interval::closed(0, 1));
    for (std::int64_t i = 0; i < n; ++i) f.add(Box(intervals));
    return f;
}

BoxFamily permuted(const BoxFamily& f, const std::vector<std::size_t>& perm) {
    BoxFamily out(f.dim());
    for (std::size_t i : perm) out.add(f.box(i));
    return out;
}

// x -> s x + t per axis, s > 0.
BoxFamily rescaled(const BoxFamily& f, const std::vector<Rational>& scale,
                   const std::vector<Rational>& offset) {
    BoxFamily out(f.dim());
    for (const Box& b : f.boxes()) {
        std::vector<Interval> intervals;
        for (int ax = 0; ax < f.dim(); ++ax) {
            const Interval& iv = b.axis(ax);
            const auto a = static_cast<std::size_t>(ax);
            intervals.push_back(Interval({iv.lo().value * scale[a] + offset[a], iv.lo().open},
                                         {iv.hi().value * scale[a] + offset[a], iv.hi().open}));
        }
        out.add(Box(std::move(intervals)));
    }
    return out;
}

}  // namespace

TEST_CASE("count_pairs_naive on the named families") {
    CHECK(count_pairs_naive(gen_staircase_family(5, 2)).pairs == 4);
    CHECK(count_pairs_naive(gen_turan_family(6, 3)).pairs == 12);

    const PairReport all = count_pairs_naive(identical_boxes(7, 2));
    CHECK(all.pairs == 21);
    REQUIRE(all.alpha.has_value());
    CHECK(*all.alpha == Rational(1));
    CHECK(all.degrees == std::vector<std::int64_t>(7, 6));
}

TEST_CASE("alpha is absent below two boxes") {
    CHECK_FALSE(count_pairs_naive(BoxFamily(1)).alpha.has_value());
    CHECK_FALSE(count_pairs_naive(identical_boxes(1, 1)).alpha.has_value());
    CHECK(count_pairs_naive(identical_boxes(2, 1)).alpha.has_value());
}

TEST_CASE("sweep equals naive on staircase and disjoint families") {
    const BoxFamily stairs = gen_staircase_family(5, 2);
    CHECK(count_pairs_sweep_1d(stairs) == count_pairs_naive(stairs));
    CHECK(count_pairs_sweep_1d(stairs).pairs == 4);

    BoxFamily disjoint(1);
    for (int i = 0; i < 9; ++i) disjoint.add(Box({Interval::open(3 * i, 3 * i + 1)}));
    const PairReport r = count_pairs_sweep_1d(disjoint);
    CHECK(r.pairs == 0);
    CHECK(*r.alpha == Rational(0));

    CHECK_THROWS_AS(count_pairs_sweep_1d(gen_turan_family(4, 2)), DimensionMismatch);
}

TEST_CASE("sweep equals naive on random 1-D families") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const bool closed = seed % 2 == 0;
        const auto n = static_cast<std::int64_t>(20 + (seed * 37) % 180);
        const BoxFamily f =
            gen_random_family(n, 1, seed, {Rational(50), Rational(1, 4), Rational(20), closed});
        CHECK(count_pairs_sweep_1d(f) == count_pairs_naive(f));
    }
}

TEST_CASE("report internal consistency: degree sum, pair range, alpha range") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const auto d = static_cast<std::int64_t>(1 + seed % 3);
        const BoxFamily f =
            gen_random_family(30, d, seed, {Rational(10), Rational(1), Rational(6), false});
        const PairReport r = count_pairs_naive(f);
        std::int64_t degree_sum = 0;
        for (std::int64_t deg : r.degrees) degree_sum += deg;
        CHECK(degree_sum == 2 * r.pairs);
        CHECK(r.pairs >= 0);
        CHECK(r.pairs <= r.n * (r.n - 1) / 2);
        REQUIRE(r.alpha.has_value());
        CHECK(*r.alpha >= Rational(0));
        CHECK(*r.alpha <= Rational(1));
    }
}

TEST_CASE("boundary-heavy 1-D families: duplicated endpoints, mixed flags") {
    BoxFamily f(1);
    f.add(Box({Interval::closed(0, 1)}));
    f.add(Box({Interval({Rational(1), true}, {Rational(2), false})}));
    f.add(Box({Interval::closed(1, 1)}));
    f.add(Box({Interval({Rational(0), false}, {Rational(1), true})}));
    f.add(Box({Interval::open(1, 2)}));
    CHECK(count_pairs_sweep_1d(f) == count_pairs_naive(f));
}

TEST_CASE("permutation invariance of pairs and degrees") {
    const BoxFamily f = gen_random_family(50, 2, 5, {Rational(10), Rational(1), Rational(5), false});
    const PairReport base = count_pairs_naive(f);

    std::vector<std::size_t> perm(f.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(99);
    std::shuffle(perm.begin(), perm.end(), rng);

    const PairReport shuffled = count_pairs_naive(permuted(f, perm));
    CHECK(shuffled.pairs == base.pairs);
    CHECK(shuffled.alpha == base.alpha);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        CHECK(shuffled.degrees[i] == base.degrees[perm[i]]);
    }
}

TEST_CASE("per-axis positive affine rescaling leaves the report unchanged") {
    const BoxFamily f = gen_random_family(40, 3, 8, {Rational(10), Rational(1), Rational(5), true});
    const std::vector<Rational> scale{Rational(3), Rational(1, 2), Rational(7, 5)};
    const std::vector<Rational> offset{Rational(-4), Rational(11, 3), Rational(0)};
    CHECK(count_pairs_naive(rescaled(f, scale, offset)) == count_pairs_naive(f));
}

TEST_CASE("edge_list") {
    BoxFamily disjoint(2);
    disjoint.add(Box({Interval::closed(0, 1), Interval::closed(0, 1)}));
    disjoint.add(Box({Interval::closed(5, 6), Interval::closed(5, 6)}));
    CHECK(edge_list(disjoint).empty());

    const auto turan_edges_42 = edge_list(gen_turan_family(4, 2));
    const std::vector<std::pair<std::int32_t, std::int32_t>> expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    CHECK(turan_edges_42 == expected);

    const BoxFamily all = identical_boxes(5, 1);
    CHECK(edge_list(all).size() == 10);

    const BoxFamily f = gen_random_family(60, 2, 13, {Rational(10), Rational(1), Rational(5), false});
    CHECK(static_cast<std::int64_t>(edge_list(f).size()) == count_pairs_naive(f).pairs);
}
