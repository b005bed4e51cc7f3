#include "analytics.hpp"

#include <algorithm>
#include <thread>

#include "errors.hpp"
#include "parallel.hpp"

namespace boxhelly {

namespace {

void finish_report(PairReport& r) {
    std::int64_t sum = 0;
    for (std::int64_t d : r.degrees) sum += d;
    r.pairs = sum / 2;
    if (r.n >= 2) {
        r.alpha = Rational(r.pairs) / Rational(r.n * (r.n - 1) / 2);
    }
}

}  // namespace

PairReport count_pairs_naive(const BoxFamily& f) {
    const std::size_t n = f.size();
    PairReport report;
    report.n = static_cast<std::int64_t>(n);
    report.degrees.assign(n, 0);

    const unsigned workers = std::min<unsigned>(worker_count(), n > 1 ? static_cast<unsigned>(n / 2) : 1);
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (boxes_intersect(f.box(i), f.box(j))) {
                    ++report.degrees[i];
                    ++report.degrees[j];
                }
            }
        }
    } else {
        // Fixed row partition with per-worker degree tallies; the final
        // sum reduction makes the result independent of scheduling.
        std::vector<std::vector<std::int64_t>> local(workers, std::vector<std::int64_t>(n, 0));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::vector<std::int64_t>& deg = local[w];
                for (std::size_t i = w; i < n; i += workers) {
                    for (std::size_t j = i + 1; j < n; ++j) {
                        if (boxes_intersect(f.box(i), f.box(j))) {
                            ++deg[i];
                            ++deg[j];
                        }
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        for (unsigned w = 0; w < workers; ++w) {
            for (std::size_t i = 0; i < n; ++i) report.degrees[i] += local[w][i];
        }
    }

    finish_report(report);
    return report;
}

PairReport count_pairs_sweep_1d(const BoxFamily& f) {
    if (f.dim() != 1) {
        throw DimensionMismatch("count_pairs_sweep_1d requires dimension 1, got " +
                                std::to_string(f.dim()));
    }
    const std::size_t n = f.size();
    PairReport report;
    report.n = static_cast<std::int64_t>(n);
    report.degrees.assign(n, 0);

    std::vector<Bound> lows, highs;
    lows.reserve(n);
    highs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        lows.push_back(Bound::lower(f.box(i).axis(0).lo()));
        highs.push_back(Bound::upper(f.box(i).axis(0).hi()));
    }
    std::vector<Bound> sorted_lows = lows, sorted_highs = highs;
    std::sort(sorted_lows.begin(), sorted_lows.end());
    std::sort(sorted_highs.begin(), sorted_highs.end());

    // deg(i) = #{j : L_j <= H_i} - #{j : H_j < L_i} - 1; the subtrahend set
    // is contained in the first, and interval i itself is in the difference.
    for (std::size_t i = 0; i < n; ++i) {
        auto started = std::upper_bound(sorted_lows.begin(), sorted_lows.end(), highs[i]) -
                       sorted_lows.begin();
        auto ended = std::lower_bound(sorted_highs.begin(), sorted_highs.end(), lows[i]) -
                     sorted_highs.begin();
        report.degrees[i] = static_cast<std::int64_t>(started - ended) - 1;
    }

    finish_report(report);
    return report;
}

std::vector<std::pair<std::int32_t, std::int32_t>> edge_list(const BoxFamily& f) {
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (boxes_intersect(f.box(i), f.box(j))) {
                edges.emplace_back(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
            }
        }
    }
    return edges;
}

}  // namespace boxhelly
