#pragma once

#include <cstdint>
#include <optional>

#include "geometry.hpp"
#include "rational.hpp"

namespace boxhelly {

// Edge count of the balanced complete m-partite graph on n vertices:
// C(n,2) - sum C(n_i,2). Equals (1 - 1/m) n^2 / 2 when m divides n.
std::int64_t turan_edges(std::int64_t n, std::int64_t m);

// Upper bound on the maximal pair count of n boxes in R^d with no k+1
// sharing a point: ((d-1) n^2 + (2k+d) n) / (2d), exact. Requires
// n >= k >= d >= 1.
Rational t_upper_bound(std::int64_t n, std::int64_t k, std::int64_t d);

// Same expression with no domain check; the verdict machinery and the
// acceptance sweeps evaluate it at measured depths that may fall below d.
Rational t_upper_formula(std::int64_t n, std::int64_t k, std::int64_t d);

// Exact one-dimensional maximum: (k-1) n - C(k,2). Requires 1 <= k <= n.
std::int64_t t_exact_1d(std::int64_t n, std::int64_t k);

// Sharp fractional-Helly coefficient for convex sets: 1 - (1-alpha)^(1/(d+1)).
// Floating result; alpha must lie in (0, 1].
double kalai_beta(const Rational& alpha, std::int64_t d);

// Intersecting-subfamily size forced by a pair surplus: when at least
// ((d-1)/(2d) + eps) n^2 pairs intersect, some d n eps - d/2 + 1 boxes
// share a point. Exact. Requires eps > 0.
Rational subfamily_size_bound(std::int64_t n, std::int64_t d, const Rational& eps);

// Depth guaranteed in the high-alpha regime: (1 - d sqrt(1-alpha)) n,
// floating. Requires alpha in (1 - 1/d^2, 1]; strictly positive there.
double limit_depth_bound(std::int64_t n, std::int64_t d, const Rational& alpha);

// Exact hypothesis threshold for limit_depth_bound, 1 - 1/d^2.
Rational limit_alpha_threshold(std::int64_t d);

// Pair-fraction floor below which the slab construction rules out any
// fractional Helly statement: (d-1)/d.
Rational fractional_alpha_threshold(std::int64_t d);

// Smallest integer >= bound - 1e-9: integer comparisons against floating
// bounds round the requirement down by a hair so float error can never
// fail a true statement.
std::int64_t required_count(double bound);
std::int64_t required_count(const Rational& bound);

enum class Verdict { pass, fail, vacuous };

const char* verdict_name(Verdict v);

// Checks measured pairs < t_upper_bound(n, k, d) exactly. Throws
// HypothesisError when the family's max depth exceeds k (the caller's k is
// wrong), and InvalidArgument when n >= k >= d fails.
Verdict verify_turan_bound(const BoxFamily& f, std::int64_t k);

// Checks the pair-surplus implication: when pairs >= ((d-1)/(2d) + eps) n^2,
// the max depth must reach subfamily_size_bound(n, d, eps); vacuous
// otherwise.
Verdict verify_subfamily_bound(const BoxFamily& f, const Rational& eps);

}  // namespace boxhelly
