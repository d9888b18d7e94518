#ifndef SHYLAB_PL_REAL_HPP
#define SHYLAB_PL_REAL_HPP

#include <optional>
#include <vector>

#include "shylab/interval.hpp"
#include "shylab/rational.hpp"

namespace shylab {

struct PLBreakpoint {
    Rat x;
    Rat y;
    bool operator==(const PLBreakpoint&) const = default;
};

// An exact-rational piecewise-linear function given by its breakpoints.
// Non-circular: a function on the closed interval [x_front, x_back].
// Circular: the domain's ends are glued, so the first and last y agree and
// evaluation wraps modulo the period.
class PLFunction {
public:
    PLFunction(std::vector<PLBreakpoint> breakpoints, bool circular);

    const std::vector<PLBreakpoint>& breakpoints() const { return breakpoints_; }
    bool circular() const { return circular_; }
    Rat domain_lo() const { return breakpoints_.front().x; }
    Rat domain_hi() const { return breakpoints_.back().x; }
    // Smallest and largest value attained (PL functions attain everything
    // in between).
    Rat min_value() const;
    Rat max_value() const;

    bool operator==(const PLFunction&) const = default;

private:
    std::vector<PLBreakpoint> breakpoints_;
    bool circular_;
};

// Exact evaluation by linear interpolation; circular domains wrap x by the
// period first.
Rat eval_pl(const PLFunction& f, const Rat& x);

// Entirely non-decreasing or entirely non-increasing breakpoint values.
bool is_monotone(const PLFunction& f);

// Exact solution set {x in domain : f(x) in A}, solved piece by piece with
// endpoint openness preserved. For circular functions the set is reported
// on the base interval; circle connectivity is the caller's concern.
IntervalUnion preimage_interval(const PLFunction& f, const RationalInterval& A);

// The finite family of value intervals that decides shyness: all closed
// [a, b] (including points) with endpoints among the breakpoint values and
// the midpoints of consecutive distinct values. A PL function's level-set
// topology only changes at breakpoint values, so a disconnected preimage of
// any subinterval of the image forces a disconnected preimage of one of
// these.
std::vector<RationalInterval> shy_test_intervals(const PLFunction& f);

// First test interval whose preimage splits, with the offending preimage.
struct PLShyWitness {
    RationalInterval level;
    IntervalUnion preimage;
};
std::optional<PLShyWitness> pl_shy_witness(const PLFunction& f);

// Interval-domain shyness: every test interval pulls back to one piece.
bool is_shy_pl(const PLFunction& f);

// Circle-domain shyness: as is_shy_pl, but parts meeting across the glued
// endpoint count as one.
bool is_shy_circle_pl(const PLFunction& f);
std::optional<PLShyWitness> circle_pl_shy_witness(const PLFunction& f);

// An interval-to-circle map: a non-circular PLFunction whose values are
// angles in turns (fractions of a full revolution), compared modulo 1.
class AngleMap {
public:
    explicit AngleMap(PLFunction pl);

    const PLFunction& pl() const { return pl_; }
    // Sum of |delta angle| over the pieces.
    Rat total_variation() const;
    // Strictly increasing or strictly decreasing angles.
    bool strictly_monotone() const;

    bool operator==(const AngleMap&) const = default;

private:
    PLFunction pl_;
};

// A counterclockwise circle arc from `start` to `start + length` turns,
// 0 <= length <= 1, with closable ends; start is normalized into [0, 1).
// A length-1 arc with both ends closed is the whole circle.
class Arc {
public:
    Arc(const Rat& from, const Rat& to, bool from_closed, bool to_closed);

    Rat start() const { return start_; }
    Rat length() const { return length_; }
    bool start_closed() const { return start_closed_; }
    bool end_closed() const { return end_closed_; }

    // Membership of an angle, compared modulo 1 turn.
    bool contains(const Rat& angle) const;

    bool operator==(const Arc&) const = default;

private:
    Rat start_;
    Rat length_;
    bool start_closed_;
    bool end_closed_;
};

// Exact solution set {x in domain : m(x) mod 1 lies on A}.
IntervalUnion arc_preimage(const AngleMap& m, const Arc& A);

// Shyness of an injective interval-to-circle map (strictly monotone angles
// with total variation < 1; anything else is outside the supported regime):
// every subarc of the image with endpoints in the breakpoint-angle test set
// must pull back to a single interval.
bool is_shy_interval_to_circle(const AngleMap& m);

}  // namespace shylab

#endif
