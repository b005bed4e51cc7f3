#include "geometry.hpp"

#include "errors.hpp"

namespace boxhelly {

namespace {

bool nonempty_bounds(const Endpoint& lo, const Endpoint& hi) {
    if (lo.value < hi.value) return true;
    return lo.value == hi.value && !lo.open && !hi.open;
}

// Tighter of two lower bounds (larger in the boundary order).
const Endpoint& max_lower(const Endpoint& a, const Endpoint& b) {
    return Bound::lower(a) < Bound::lower(b) ? b : a;
}

// Tighter of two upper bounds (smaller in the boundary order).
const Endpoint& min_upper(const Endpoint& a, const Endpoint& b) {
    return Bound::upper(b) < Bound::upper(a) ? b : a;
}

}  // namespace

Interval::Interval(Endpoint lo, Endpoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!nonempty_bounds(lo_, hi_)) {
        throw InvalidArgument("empty interval: lo " + lo_.value.str() +
                              (lo_.open ? " (open)" : " (closed)") + ", hi " + hi_.value.str() +
                              (hi_.open ? " (open)" : " (closed)"));
    }
}

bool Interval::contains(const Rational& x) const {
    if (lo_.value > x || (lo_.value == x && lo_.open)) return false;
    if (hi_.value < x || (hi_.value == x && hi_.open)) return false;
    return true;
}

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    if (intervals_.empty()) throw InvalidArgument("box must have at least one axis");
}

BoxFamily::BoxFamily(int dim, std::vector<Box> boxes, std::string label)
    : dim_(dim), boxes_(std::move(boxes)), label_(std::move(label)) {
    if (dim_ < 1) throw InvalidArgument("family dimension must be positive");
    for (const Box& b : boxes_) {
        if (b.dim() != dim_) {
            throw DimensionMismatch("box of dimension " + std::to_string(b.dim()) +
                                    " in family of dimension " + std::to_string(dim_));
        }
    }
}

void BoxFamily::add(Box b) {
    if (b.dim() != dim_) {
        throw DimensionMismatch("box of dimension " + std::to_string(b.dim()) +
                                " added to family of dimension " + std::to_string(dim_));
    }
    boxes_.push_back(std::move(b));
}

bool intervals_intersect(const Interval& a, const Interval& b) {
    const Endpoint& lo = max_lower(a.lo(), b.lo());
    const Endpoint& hi = min_upper(a.hi(), b.hi());
    return nonempty_bounds(lo, hi);
}

std::optional<Interval> interval_intersection(const Interval& a, const Interval& b) {
    const Endpoint& lo = max_lower(a.lo(), b.lo());
    const Endpoint& hi = min_upper(a.hi(), b.hi());
    if (!nonempty_bounds(lo, hi)) return std::nullopt;
    return Interval(lo, hi);
}

bool boxes_intersect(const Box& a, const Box& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("boxes_intersect on dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
    }
    for (int i = 0; i < a.dim(); ++i) {
        if (!intervals_intersect(a.axis(i), b.axis(i))) return false;
    }
    return true;
}

bool point_in_box(const RPoint& p, const Box& b) {
    if (p.dim() != b.dim()) {
        throw DimensionMismatch("point_in_box on dimensions " + std::to_string(p.dim()) +
                                " and " + std::to_string(b.dim()));
    }
    for (int i = 0; i < b.dim(); ++i) {
        if (!b.axis(i).contains(p.coords[static_cast<std::size_t>(i)])) return false;
    }
    return true;
}

std::optional<Box> intersection_box(std::span<const Box> boxes) {
    if (boxes.empty()) throw EmptyFamily("intersection_box of empty list");
    const int dim = boxes.front().dim();
    std::vector<Interval> result = boxes.front().intervals();
    for (std::size_t i = 1; i < boxes.size(); ++i) {
        if (boxes[i].dim() != dim) {
            throw DimensionMismatch("intersection_box over mixed dimensions");
        }
        for (int ax = 0; ax < dim; ++ax) {
            auto sect = interval_intersection(result[static_cast<std::size_t>(ax)], boxes[i].axis(ax));
            if (!sect) return std::nullopt;
            result[static_cast<std::size_t>(ax)] = *sect;
        }
    }
    return Box(std::move(result));
}

RPoint inner_point(const Box& b) {
    RPoint p;
    p.coords.reserve(static_cast<std::size_t>(b.dim()));
    for (int i = 0; i < b.dim(); ++i) {
        const Interval& iv = b.axis(i);
        if (iv.degenerate()) {
            p.coords.push_back(iv.lo().value);
        } else {
            p.coords.push_back((iv.lo().value + iv.hi().value) / Rational(2));
        }
    }
    return p;
}

}  // namespace boxhelly
