#include "extraction.hpp"

#include "errors.hpp"

namespace boxhelly {

ExtractionResult extract_with_diagnostics(const BoxFamily& f) {
    const std::size_t n = f.size();
    if (n == 0) throw EmptyFamily("extract_deep_point of empty family");
    const int dim = f.dim();

    ExtractionResult result;
    result.witness.point.coords.reserve(static_cast<std::size_t>(dim));
    result.axis_misses.reserve(static_cast<std::size_t>(dim));

    std::vector<Interval> projection;
    projection.reserve(n);
    for (int ax = 0; ax < dim; ++ax) {
        projection.clear();
        for (const Box& b : f.boxes()) projection.push_back(b.axis(ax));
        DepthWitness stab = max_depth_1d(projection);
        result.witness.point.coords.push_back(stab.point.coords[0]);
        result.axis_misses.push_back(static_cast<std::int64_t>(n) - stab.depth);
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (point_in_box(result.witness.point, f.box(i))) {
            result.witness.members.push_back(static_cast<std::int32_t>(i));
        }
    }
    result.witness.depth = static_cast<std::int64_t>(result.witness.members.size());
    return result;
}

DepthWitness extract_deep_point(const BoxFamily& f) {
    return extract_with_diagnostics(f).witness;
}

std::pair<std::int64_t, std::int64_t> extraction_gap(const BoxFamily& f) {
    return {extract_deep_point(f).depth, max_depth(f).depth};
}

}  // namespace boxhelly
