#include "bounds.hpp"

#include <cmath>
#include <string>

#include "analytics.hpp"
#include "depth.hpp"
#include "errors.hpp"

namespace boxhelly {

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::int64_t turan_edges(std::int64_t n, std::int64_t m) {
    if (m < 1 || m > n) {
        throw InvalidArgument("turan_edges requires 1 <= m <= n, got n=" + std::to_string(n) +
                              " m=" + std::to_string(m));
    }
    const std::int64_t q = n / m;
    const std::int64_t r = n % m;
    return choose2(n) - r * choose2(q + 1) - (m - r) * choose2(q);
}

Rational t_upper_formula(std::int64_t n, std::int64_t k, std::int64_t d) {
    return Rational::make(__int128((d - 1)) * n * n + __int128(2 * k + d) * n, 2 * d);
}

Rational t_upper_bound(std::int64_t n, std::int64_t k, std::int64_t d) {
    if (!(n >= k && k >= d && d >= 1)) {
        throw InvalidArgument("t_upper_bound requires n >= k >= d >= 1, got n=" +
                              std::to_string(n) + " k=" + std::to_string(k) +
                              " d=" + std::to_string(d));
    }
    return t_upper_formula(n, k, d);
}

std::int64_t t_exact_1d(std::int64_t n, std::int64_t k) {
    if (k < 1 || k > n) {
        throw InvalidArgument("t_exact_1d requires 1 <= k <= n, got n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    }
    return (k - 1) * n - choose2(k);
}

double kalai_beta(const Rational& alpha, std::int64_t d) {
    if (d < 1) throw InvalidArgument("kalai_beta requires d >= 1");
    if (!(Rational(0) < alpha && alpha <= Rational(1))) {
        throw InvalidArgument("kalai_beta requires alpha in (0, 1], got " + alpha.str());
    }
    const Rational one_minus = Rational(1) - alpha;
    return 1.0 - std::pow(one_minus.to_double(), 1.0 / static_cast<double>(d + 1));
}

Rational subfamily_size_bound(std::int64_t n, std::int64_t d, const Rational& eps) {
    if (!(eps > Rational(0))) {
        throw InvalidArgument("subfamily_size_bound requires eps > 0, got " + eps.str());
    }
    if (d < 1 || n < 0) throw InvalidArgument("subfamily_size_bound requires n >= 0, d >= 1");
    return Rational(d * n) * eps - Rational(d, 2) + Rational(1);
}

Rational limit_alpha_threshold(std::int64_t d) {
    if (d < 1) throw InvalidArgument("limit_alpha_threshold requires d >= 1");
    return Rational(1) - Rational(1, d * d);
}

double limit_depth_bound(std::int64_t n, std::int64_t d, const Rational& alpha) {
    if (d < 1 || n < 0) throw InvalidArgument("limit_depth_bound requires n >= 0, d >= 1");
    if (!(alpha > limit_alpha_threshold(d) && alpha <= Rational(1))) {
        throw InvalidArgument("limit_depth_bound requires alpha in (1 - 1/d^2, 1], got " + alpha.str());
    }
    const double eps = (Rational(1) - alpha).to_double();
    return (1.0 - static_cast<double>(d) * std::sqrt(eps)) * static_cast<double>(n);
}

Rational fractional_alpha_threshold(std::int64_t d) {
    if (d < 1) throw InvalidArgument("fractional_alpha_threshold requires d >= 1");
    return Rational(d - 1, d);
}

std::int64_t required_count(double bound) {
    return static_cast<std::int64_t>(std::ceil(bound - 1e-9));
}

std::int64_t required_count(const Rational& bound) {
    return (bound - Rational(1, 1000000000)).ceil();
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::vacuous: return "VACUOUS";
    }
    return "?";
}

Verdict verify_turan_bound(const BoxFamily& f, std::int64_t k) {
    const std::int64_t depth = max_depth(f).depth;
    if (depth > k) {
        throw HypothesisError("verify_turan_bound: measured depth " + std::to_string(depth) +
                              " exceeds k=" + std::to_string(k));
    }
    const std::int64_t n = static_cast<std::int64_t>(f.size());
    const Rational bound = t_upper_bound(n, k, f.dim());
    const std::int64_t pairs = count_pairs_naive(f).pairs;
    return Rational(pairs) < bound ? Verdict::pass : Verdict::fail;
}

Verdict verify_subfamily_bound(const BoxFamily& f, const Rational& eps) {
    const Rational size = subfamily_size_bound(static_cast<std::int64_t>(f.size()), f.dim(), eps);
    const std::int64_t n = static_cast<std::int64_t>(f.size());
    const std::int64_t d = f.dim();
    const Rational hypothesis =
        (Rational(d - 1, 2 * d) + eps) * Rational(n) * Rational(n);
    const std::int64_t pairs = count_pairs_naive(f).pairs;
    if (Rational(pairs) < hypothesis) return Verdict::vacuous;
    const std::int64_t depth = max_depth(f).depth;
    return Rational(depth) >= size ? Verdict::pass : Verdict::fail;
}

}  // namespace boxhelly
