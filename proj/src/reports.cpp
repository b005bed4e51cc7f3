#include "reports.hpp"

#include <algorithm>
#include <map>

#include "analytics.hpp"
#include "bounds.hpp"
#include "depth.hpp"
#include "errors.hpp"
#include "extraction.hpp"
#include "io_json.hpp"
#include "search.hpp"

namespace boxhelly {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) { return r.str(); }

ordered_json optional_rational_json(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return r->str();
}

ordered_json point_json(const RPoint& p) {
    ordered_json arr = ordered_json::array();
    for (const Rational& c : p.coords) arr.push_back(c.str());
    return arr;
}

ordered_json witness_json(const DepthWitness& w) {
    ordered_json j;
    j["point"] = point_json(w.point);
    j["depth"] = w.depth;
    j["members"] = w.members;
    return j;
}

PairReport pair_stats(const BoxFamily& f) {
    return f.dim() == 1 ? count_pairs_sweep_1d(f) : count_pairs_naive(f);
}

}  // namespace

ordered_json analyze_report(const BoxFamily& f, bool with_edges) {
    const PairReport stats = pair_stats(f);

    ordered_json j;
    if (!f.label().empty()) j["label"] = f.label();
    j["n"] = stats.n;
    j["dim"] = f.dim();
    j["pairs"] = stats.pairs;
    j["alpha"] = optional_rational_json(stats.alpha);
    j["degrees"] = stats.degrees;

    std::map<std::int64_t, std::int64_t> histogram;
    for (std::int64_t deg : stats.degrees) ++histogram[deg];
    ordered_json hist = ordered_json::array();
    for (const auto& [degree, count] : histogram) {
        hist.push_back({{"degree", degree}, {"count", count}});
    }
    j["degree_histogram"] = std::move(hist);

    if (f.size() == 0) {
        j["max_depth"] = 0;
        j["witness"] = nullptr;
    } else {
        const DepthWitness w = max_depth(f);
        j["max_depth"] = w.depth;
        j["witness"] = witness_json(w);
    }

    if (with_edges) {
        ordered_json edges = ordered_json::array();
        for (const auto& [a, b] : edge_list(f)) edges.push_back({a, b});
        j["edges"] = std::move(edges);
    }
    return j;
}

ordered_json extract_report(const BoxFamily& f) {
    const ExtractionResult ext = extract_with_diagnostics(f);
    const PairReport stats = pair_stats(f);
    const std::int64_t n = stats.n;
    const std::int64_t d = f.dim();

    ordered_json j;
    if (!f.label().empty()) j["label"] = f.label();
    j["n"] = n;
    j["dim"] = d;
    j["pairs"] = stats.pairs;
    j["alpha"] = optional_rational_json(stats.alpha);
    j["point"] = point_json(ext.witness.point);
    j["depth"] = ext.witness.depth;
    j["members"] = ext.witness.members;
    j["optimal_depth"] = max_depth(f).depth;
    j["axis_misses"] = ext.axis_misses;

    const Rational threshold = limit_alpha_threshold(d);
    ordered_json guarantee;
    guarantee["threshold"] = rational_json(threshold);
    const bool hypothesis = stats.alpha.has_value() && *stats.alpha > threshold;
    guarantee["hypothesis"] = hypothesis;
    if (hypothesis) {
        const double bound = limit_depth_bound(n, d, *stats.alpha);
        guarantee["bound"] = bound;
        guarantee["required"] = required_count(bound);
        guarantee["holds"] = ext.witness.depth >= required_count(bound);
    } else {
        guarantee["bound"] = nullptr;
        guarantee["required"] = nullptr;
        guarantee["holds"] = nullptr;
    }
    j["guarantee"] = std::move(guarantee);
    return j;
}

ordered_json verify_report(const BoxFamily& f, std::optional<std::int64_t> k,
                           const std::optional<Rational>& eps, bool& any_fail) {
    if (f.size() == 0) throw EmptyFamily("verify requires a nonempty family");
    const PairReport stats = pair_stats(f);
    const std::int64_t n = stats.n;
    const std::int64_t d = f.dim();
    const std::int64_t depth = max_depth(f).depth;

    std::int64_t k_eff;
    if (k.has_value()) {
        if (depth > *k) {
            throw HypothesisError("measured depth " + std::to_string(depth) + " exceeds k=" +
                                  std::to_string(*k) + "; the depth-cap hypothesis fails");
        }
        k_eff = *k;
    } else {
        k_eff = std::max(depth, d);
    }

    const Rational t_upper = t_upper_bound(n, k_eff, d);

    ordered_json j;
    if (!f.label().empty()) j["label"] = f.label();
    j["n"] = n;
    j["k"] = k_eff;
    j["d"] = d;
    j["pairs"] = stats.pairs;
    j["alpha"] = optional_rational_json(stats.alpha);
    j["depth"] = depth;
    j["t_upper"] = rational_json(t_upper);
    j["t_exact_1d"] = d == 1 ? ordered_json(t_exact_1d(n, k_eff)) : ordered_json(nullptr);

    if (stats.alpha.has_value() && !stats.alpha->is_zero()) {
        j["kalai_beta"] = kalai_beta(*stats.alpha, d);
    } else {
        j["kalai_beta"] = nullptr;
    }

    j["eps"] = optional_rational_json(eps);
    ordered_json subfamily_verdict = nullptr;
    if (eps.has_value()) {
        const Rational size = subfamily_size_bound(n, d, *eps);
        const Rational needed = (Rational(d - 1, 2 * d) + *eps) * Rational(n) * Rational(n);
        j["subfamily_size"] = rational_json(size);
        j["subfamily_hypothesis_pairs"] = rational_json(needed);
        if (Rational(stats.pairs) < needed) {
            subfamily_verdict = verdict_name(Verdict::vacuous);
        } else {
            subfamily_verdict =
                verdict_name(Rational(depth) >= size ? Verdict::pass : Verdict::fail);
        }
    } else {
        j["subfamily_size"] = nullptr;
        j["subfamily_hypothesis_pairs"] = nullptr;
    }

    const Rational limit_thr = limit_alpha_threshold(d);
    j["limit_threshold"] = rational_json(limit_thr);
    ordered_json limit_verdict;
    if (stats.alpha.has_value() && *stats.alpha > limit_thr) {
        const double size = limit_depth_bound(n, d, *stats.alpha);
        j["limit_size"] = size;
        limit_verdict = verdict_name(depth >= required_count(size) ? Verdict::pass : Verdict::fail);
    } else {
        j["limit_size"] = nullptr;
        limit_verdict = verdict_name(Verdict::vacuous);
    }

    j["fractional_threshold"] = rational_json(fractional_alpha_threshold(d));

    ordered_json verdicts;
    verdicts["pair_bound"] =
        verdict_name(Rational(stats.pairs) < t_upper ? Verdict::pass : Verdict::fail);
    verdicts["subfamily"] = subfamily_verdict;
    verdicts["limit"] = limit_verdict;

    auto is_fail = [](const ordered_json& v) {
        return v.is_string() && v.get<std::string>() == "FAIL";
    };
    any_fail = is_fail(verdicts["pair_bound"]) || is_fail(subfamily_verdict) ||
               is_fail(limit_verdict);

    j["verdicts"] = std::move(verdicts);
    return j;
}

ordered_json search_report(std::int64_t n, std::int64_t k, std::int64_t d) {
    const SearchResult result = d == 1 ? search_extremal_1d(n, k) : search_extremal_d(n, k, d);
    const Rational upper = t_upper_formula(n, k, d);

    ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["d"] = d;
    j["max_pairs"] = result.max_pairs;
    j["kind"] = d == 1 ? "exact" : "lower_bound";
    if (d == 1) {
        const std::int64_t expected = t_exact_1d(n, k);
        j["t_exact_1d"] = expected;
        j["equality"] = result.max_pairs == expected;
    } else {
        j["t_exact_1d"] = nullptr;
        j["equality"] = nullptr;
    }
    j["t_upper"] = rational_json(upper);
    j["below_upper"] = Rational(result.max_pairs) < upper;
    j["witness"] = family_to_json(result.witness);
    return j;
}

}  // namespace boxhelly
