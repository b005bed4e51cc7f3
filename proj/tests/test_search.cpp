#include <doctest.h>

#include "analytics.hpp"
#include "bounds.hpp"
#include "depth.hpp"
#include "errors.hpp"
#include "search.hpp"

using namespace boxhelly;

TEST_CASE("one-dimensional search reproduces the exact formula") {
    CHECK(search_extremal_1d(3, 1).max_pairs == 0);
    CHECK(search_extremal_1d(4, 2).max_pairs == 3);
    CHECK(search_extremal_1d(5, 3).max_pairs == 7);

    for (std::int64_t n = 1; n <= 5; ++n) {
        for (std::int64_t k = 1; k <= n; ++k) {
            CHECK(search_extremal_1d(n, k).max_pairs == t_exact_1d(n, k));
        }
    }
}

TEST_CASE("one-dimensional witnesses are consistent") {
    const SearchResult r = search_extremal_1d(5, 2);
    CHECK(r.max_pairs == 4);
    CHECK(r.witness.size() == 5);
    CHECK(r.witness.dim() == 1);
    CHECK(max_depth(r.witness).depth <= 2);
    CHECK(count_pairs_naive(r.witness).pairs == r.max_pairs);
}

TEST_CASE("d >= 2 search is a certified lower bound") {
    CHECK(search_extremal_d(2, 1, 2).max_pairs == 0);

    // three pairwise-intersecting boxes would share a point, so depth <= 2
    // caps the pair count at 2, and the slab construction attains it
    const SearchResult r = search_extremal_d(3, 2, 2);
    CHECK(r.max_pairs == 2);
    CHECK(r.max_pairs >= turan_edges(3, 2));
    CHECK(Rational(r.max_pairs) < t_upper_formula(3, 2, 2));
    CHECK(max_depth(r.witness).depth <= 2);
    CHECK(count_pairs_naive(r.witness).pairs == r.max_pairs);

    const SearchResult r3 = search_extremal_d(3, 2, 3);
    CHECK(r3.max_pairs >= turan_edges(3, 2));
    CHECK(max_depth(r3.witness).depth <= 2);
}

TEST_CASE("depth-unconstrained search saturates at all pairs") {
    CHECK(search_extremal_1d(4, 4).max_pairs == 6);
    CHECK(search_extremal_d(3, 3, 2).max_pairs == 3);
}

TEST_CASE("limits and parameter checks") {
    CHECK_THROWS_AS(search_extremal_1d(8, 2), LimitExceeded);
    CHECK_THROWS_AS(search_extremal_1d(0, 1), LimitExceeded);
    CHECK_THROWS_AS(search_extremal_1d(4, 0), InvalidArgument);
    CHECK_THROWS_AS(search_extremal_1d(4, 5), InvalidArgument);
    CHECK_THROWS_AS(search_extremal_d(5, 2, 2), LimitExceeded);
    CHECK_THROWS_AS(search_extremal_d(3, 2, 4), InvalidArgument);
    CHECK_THROWS_AS(search_extremal_d(3, 2, 1), InvalidArgument);
}
