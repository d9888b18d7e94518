#ifndef SHYLAB_INTERVAL_HPP
#define SHYLAB_INTERVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "shylab/rational.hpp"

namespace shylab {

// A nonempty rational interval with individually open or closed ends.
// Degenerate intervals (lo == hi) are always closed points; the empty set
// is not representable here, it is the IntervalUnion with no parts.
struct RationalInterval {
    Rat lo;
    Rat hi;
    bool lo_closed = true;
    bool hi_closed = true;

    RationalInterval(Rat lo_, Rat hi_, bool lo_closed_, bool hi_closed_);

    static RationalInterval closed(Rat lo, Rat hi) { return {lo, hi, true, true}; }
    static RationalInterval open(Rat lo, Rat hi) { return {lo, hi, false, false}; }
    static RationalInterval point(Rat x) { return {x, x, true, true}; }

    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const;

    bool operator==(const RationalInterval& other) const = default;
};

std::string interval_to_string(const RationalInterval& iv);

// Intersection, or nullopt when empty. Arguments may overlap arbitrarily.
std::optional<RationalInterval> intersect(const RationalInterval& a, const RationalInterval& b);

// Sorted union of pairwise disjoint, non-mergeable intervals. Built from an
// arbitrary collection of intervals; normalization merges everything that
// overlaps or touches with at least one closed end.
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<RationalInterval> parts);  // normalizes

    void add(const RationalInterval& iv);

    const std::vector<RationalInterval>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    bool contains(const Rat& x) const;

    bool operator==(const IntervalUnion& other) const = default;

private:
    void normalize();
    std::vector<RationalInterval> parts_;
};

std::string interval_union_to_string(const IntervalUnion& u);

}  // namespace shylab

#endif
