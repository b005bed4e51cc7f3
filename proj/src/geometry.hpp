#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace boxhelly {

// One interval boundary: an exact coordinate plus a flag saying whether the
// boundary point itself is excluded.
struct Endpoint {
    Rational value;
    bool open = false;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Total order on boundaries. An open lower bound at v sits just above v and
// an open upper bound just below, so two intervals intersect exactly when
// max(lower bounds) <= min(upper bounds) in this order.
struct Bound {
    Rational value;
    int tier = 0;  // -1 upper-open, 0 closed, +1 lower-open

    static Bound lower(const Endpoint& e) { return {e.value, e.open ? +1 : 0}; }
    static Bound upper(const Endpoint& e) { return {e.value, e.open ? -1 : 0}; }

    friend bool operator==(const Bound&, const Bound&) = default;
    friend std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
        if (auto c = a.value <=> b.value; c != 0) return c;
        return a.tier <=> b.tier;
    }
};

// Nonempty interval: lo.value < hi.value, or a single closed point.
class Interval {
public:
    Interval(Endpoint lo, Endpoint hi);

    static Interval open(const Rational& a, const Rational& b) {
        return Interval({a, true}, {b, true});
    }
    static Interval closed(const Rational& a, const Rational& b) {
        return Interval({a, false}, {b, false});
    }

    const Endpoint& lo() const { return lo_; }
    const Endpoint& hi() const { return hi_; }

    bool contains(const Rational& x) const;
    bool degenerate() const { return lo_.value == hi_.value; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Endpoint lo_;
    Endpoint hi_;
};

// Axis-parallel box: one interval per coordinate axis.
class Box {
public:
    explicit Box(std::vector<Interval> intervals);

    int dim() const { return static_cast<int>(intervals_.size()); }
    const Interval& axis(int i) const { return intervals_[static_cast<std::size_t>(i)]; }
    const std::vector<Interval>& intervals() const { return intervals_; }

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> intervals_;
};

// Ordered family of boxes of a common dimension.
class BoxFamily {
public:
    explicit BoxFamily(int dim, std::vector<Box> boxes = {}, std::string label = {});

    int dim() const { return dim_; }
    std::size_t size() const { return boxes_.size(); }
    const Box& box(std::size_t i) const { return boxes_[i]; }
    const std::vector<Box>& boxes() const { return boxes_; }
    const std::string& label() const { return label_; }

    // Appends a box of matching dimension.
    void add(Box b);

private:
    int dim_;
    std::vector<Box> boxes_;
    std::string label_;
};

// Point with exact rational coordinates.
struct RPoint {
    std::vector<Rational> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    friend bool operator==(const RPoint&, const RPoint&) = default;
};

bool intervals_intersect(const Interval& a, const Interval& b);

// Overlap of two intervals under boundary semantics, if nonempty.
std::optional<Interval> interval_intersection(const Interval& a, const Interval& b);

bool boxes_intersect(const Box& a, const Box& b);

bool point_in_box(const RPoint& p, const Box& b);

// Componentwise (max lower, min upper) box of a nonempty subfamily, absent
// when the common intersection is empty.
std::optional<Box> intersection_box(std::span<const Box> boxes);

// Some exact point inside a nonempty box (midpoints, or the value itself on
// degenerate axes). Used by tests as the witness for intersection_box.
RPoint inner_point(const Box& b);

}  // namespace boxhelly
