#include <doctest.h>

#include <cmath>

#include "analytics.hpp"
#include "bounds.hpp"
#include "constructions.hpp"
#include "depth.hpp"
#include "errors.hpp"

using namespace boxhelly;

TEST_CASE("turan_edges") {
    CHECK(turan_edges(6, 3) == 12);
    CHECK(turan_edges(7, 3) == 16);  // parts 3,2,2: 3*2 + 3*2 + 2*2
    CHECK(turan_edges(9, 1) == 0);
    CHECK(turan_edges(5, 5) == 10);
    CHECK_THROWS_AS(turan_edges(3, 4), InvalidArgument);
    CHECK_THROWS_AS(turan_edges(3, 0), InvalidArgument);
}

TEST_CASE("turan_edges never exceeds (1 - 1/m) n^2 / 2, equality iff m | n") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        for (std::int64_t m = 1; m <= n; ++m) {
            const Rational cap = Rational((m - 1) * n * n, 2 * m);
            const Rational edges(turan_edges(n, m));
            const bool below = edges <= cap;
            const bool tight = (edges == cap) == (n % m == 0);
            CHECK(below);
            CHECK(tight);
            if (!below || !tight) return;
        }
    }
}

TEST_CASE("t_upper_bound") {
    CHECK(t_upper_bound(6, 2, 2) == Rational(18));
    CHECK(t_upper_bound(5, 2, 1) == Rational(25, 2));
    CHECK_THROWS_AS(t_upper_bound(5, 6, 1), InvalidArgument);
    CHECK_THROWS_AS(t_upper_bound(5, 2, 3), InvalidArgument);
    CHECK_THROWS_AS(t_upper_bound(5, 2, 0), InvalidArgument);
    // the raw formula itself stays callable out of domain
    CHECK(t_upper_formula(6, 1, 3) == Rational(2 * 36 + 5 * 6, 6));
}

TEST_CASE("t_exact_1d") {
    CHECK(t_exact_1d(5, 2) == 4);
    CHECK(t_exact_1d(9, 1) == 0);
    CHECK(t_exact_1d(4, 2) == 3);
    CHECK(t_exact_1d(5, 3) == 7);
    CHECK_THROWS_AS(t_exact_1d(4, 5), InvalidArgument);
}

TEST_CASE("formula cross-inequalities, exhaustively for 1 <= d <= k <= n <= 60") {
    for (std::int64_t d = 1; d <= 60; ++d) {
        for (std::int64_t k = d; k <= 60; ++k) {
            for (std::int64_t n = k; n <= 60; ++n) {
                const bool turan_below = Rational(turan_edges(n, d)) < t_upper_bound(n, k, d);
                CHECK(turan_below);
                if (!turan_below) return;
                if (d == 1) {
                    const bool exact_below = Rational(t_exact_1d(n, k)) < t_upper_bound(n, k, 1);
                    CHECK(exact_below);
                    if (!exact_below) return;
                }
            }
        }
    }
}

TEST_CASE("kalai_beta") {
    CHECK(kalai_beta(Rational(1), 3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kalai_beta(Rational(3, 4), 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(kalai_beta(Rational(1, 1000000), 2) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK_THROWS_AS(kalai_beta(Rational(0), 2), InvalidArgument);
    CHECK_THROWS_AS(kalai_beta(Rational(11, 10), 2), InvalidArgument);

    // monotone increasing in alpha, decreasing in d
    double prev = 0.0;
    for (int i = 1; i <= 20; ++i) {
        const double cur = kalai_beta(Rational(i, 20), 2);
        CHECK(cur > prev);
        prev = cur;
    }
    for (std::int64_t d = 1; d <= 6; ++d) {
        CHECK(kalai_beta(Rational(1, 2), d) > kalai_beta(Rational(1, 2), d + 1));
    }
}

TEST_CASE("subfamily_size_bound") {
    CHECK(subfamily_size_bound(10, 2, Rational(1, 4)) == Rational(5));
    // direct evaluation of d n eps - d/2 + 1 at eps = 1/(2 d n), d = 1
    CHECK(subfamily_size_bound(10, 1, Rational(1, 20)) == Rational(1));
    CHECK(subfamily_size_bound(12, 3, Rational(1, 8)) == Rational(4));
    CHECK_THROWS_AS(subfamily_size_bound(10, 2, Rational(0)), InvalidArgument);
    CHECK_THROWS_AS(subfamily_size_bound(10, 2, Rational(-1, 4)), InvalidArgument);
}

TEST_CASE("limit_depth_bound and threshold") {
    CHECK(limit_alpha_threshold(1) == Rational(0));
    CHECK(limit_alpha_threshold(2) == Rational(3, 4));
    CHECK(limit_alpha_threshold(3) == Rational(8, 9));

    CHECK(limit_depth_bound(17, 2, Rational(1)) == doctest::Approx(17.0).epsilon(1e-12));
    CHECK(limit_depth_bound(100, 2, Rational(99, 100)) == doctest::Approx(80.0).epsilon(1e-12));
    const double expect = (1.0 - std::sqrt(0.5)) * 40;
    CHECK(limit_depth_bound(40, 1, Rational(1, 2)) == doctest::Approx(expect).epsilon(1e-12));

    CHECK_THROWS_AS(limit_depth_bound(10, 2, Rational(3, 4)), InvalidArgument);
    CHECK_THROWS_AS(limit_depth_bound(10, 2, Rational(11, 10)), InvalidArgument);
    // strictly positive on the stated domain
    CHECK(limit_depth_bound(10, 3, Rational(80, 81)) > 0.0);
}

TEST_CASE("fractional_alpha_threshold") {
    CHECK(fractional_alpha_threshold(1) == Rational(0));
    CHECK(fractional_alpha_threshold(3) == Rational(2, 3));
    CHECK_THROWS_AS(fractional_alpha_threshold(0), InvalidArgument);
}

TEST_CASE("required_count rounds conservatively") {
    CHECK(required_count(5.0) == 5);
    CHECK(required_count(5.0 - 1e-12) == 5);
    CHECK(required_count(5.2) == 6);
    CHECK(required_count(Rational(5)) == 5);
    CHECK(required_count(Rational(51, 10)) == 6);
    CHECK(required_count(Rational(-3, 2)) == -1);
}

TEST_CASE("verify_turan_bound") {
    CHECK(verify_turan_bound(gen_turan_family(12, 3), 3) == Verdict::pass);
    CHECK(verify_turan_bound(gen_staircase_family(10, 3), 3) == Verdict::pass);
    CHECK_THROWS_AS(verify_turan_bound(gen_turan_family(12, 3), 2), HypothesisError);

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto d = static_cast<std::int64_t>(1 + seed % 3);
        const BoxFamily f = gen_random_family(
            30, d, seed, {Rational(10), Rational(2), Rational(8), seed % 2 == 0});
        const std::int64_t k = std::max(max_depth(f).depth, d);
        CHECK(verify_turan_bound(f, k) == Verdict::pass);
    }
}

TEST_CASE("verify_subfamily_bound") {
    BoxFamily identical(2);
    for (int i = 0; i < 12; ++i) {
        identical.add(Box({Interval::closed(0, 1), Interval::closed(0, 1)}));
    }
    CHECK(verify_subfamily_bound(identical, Rational(1, 5)) == Verdict::pass);

    CHECK(verify_subfamily_bound(gen_turan_family(12, 3), Rational(1, 8)) == Verdict::vacuous);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const BoxFamily f = gen_random_family(
            40, 2, seed, {Rational(10), Rational(5), Rational(10), false});
        for (const Rational& eps : {Rational(1, 100), Rational(1, 8), Rational(1, 4)}) {
            CHECK(verify_subfamily_bound(f, eps) != Verdict::fail);
        }
    }
}
