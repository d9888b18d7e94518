#include "shylab/pl_real.hpp"

#include <algorithm>

#include "shylab/errors.hpp"

namespace shylab {

PLFunction::PLFunction(std::vector<PLBreakpoint> breakpoints, bool circular)
    : breakpoints_(std::move(breakpoints)), circular_(circular) {
    if (breakpoints_.size() < 2) throw ShapeError("a PL function needs at least two breakpoints");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i].x < breakpoints_[i + 1].x))
            throw ShapeError("breakpoint x coordinates must be strictly increasing");
    if (circular_ && breakpoints_.front().y != breakpoints_.back().y)
        throw ShapeError("a circular PL function must close up: first and last values equal");
}

Rat PLFunction::min_value() const {
    Rat m = breakpoints_.front().y;
    for (const auto& bp : breakpoints_) m = std::min(m, bp.y);
    return m;
}

Rat PLFunction::max_value() const {
    Rat m = breakpoints_.front().y;
    for (const auto& bp : breakpoints_) m = std::max(m, bp.y);
    return m;
}

Rat eval_pl(const PLFunction& f, const Rat& x) {
    Rat t = x;
    if (f.circular()) {
        Rat period = f.domain_hi() - f.domain_lo();
        Rat rel = t - f.domain_lo();
        t = f.domain_lo() + rel - Rat(rat_floor(rel / period)) * period;
    } else if (t < f.domain_lo() || t > f.domain_hi()) {
        throw DomainError("evaluation point outside the domain interval");
    }
    const auto& b = f.breakpoints();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (t > b[i + 1].x) continue;
        if (b[i].y == b[i + 1].y) return b[i].y;
        return b[i].y + (t - b[i].x) * (b[i + 1].y - b[i].y) / (b[i + 1].x - b[i].x);
    }
    return b.back().y;  // t == domain_hi
}

bool is_monotone(const PLFunction& f) {
    if (f.circular()) throw ShapeError("monotonicity is an interval-domain notion");
    const auto& b = f.breakpoints();
    bool up = true, down = true;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (b[i].y > b[i + 1].y) up = false;
        if (b[i].y < b[i + 1].y) down = false;
    }
    return up || down;
}

namespace {

// Solutions of f(x) in B within one non-flat piece, B already clipped to the
// piece's value range: invert the affine map, carrying endpoint flags.
void add_piece_solutions(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1,
                         const RationalInterval& B, IntervalUnion& out) {
    Rat slope_inv = (x1 - x0) / (y1 - y0);
    Rat at_lo = x0 + (B.lo - y0) * slope_inv;
    Rat at_hi = x0 + (B.hi - y0) * slope_inv;
    if (y0 < y1)
        out.add({at_lo, at_hi, B.lo_closed, B.hi_closed});
    else
        out.add({at_hi, at_lo, B.hi_closed, B.lo_closed});
}

}  // namespace

IntervalUnion preimage_interval(const PLFunction& f, const RationalInterval& A) {
    IntervalUnion out;
    const auto& b = f.breakpoints();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const Rat &x0 = b[i].x, &x1 = b[i + 1].x, &y0 = b[i].y, &y1 = b[i + 1].y;
        if (y0 == y1) {
            if (A.contains(y0)) out.add(RationalInterval::closed(x0, x1));
            continue;
        }
        RationalInterval range = RationalInterval::closed(std::min(y0, y1), std::max(y0, y1));
        if (auto B = intersect(A, range)) add_piece_solutions(x0, x1, y0, y1, *B, out);
    }
    return out;
}

std::vector<RationalInterval> shy_test_intervals(const PLFunction& f) {
    std::vector<Rat> ys;
    for (const auto& bp : f.breakpoints()) ys.push_back(bp.y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<Rat> pts = ys;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) pts.push_back((ys[i] + ys[i + 1]) / 2);
    std::sort(pts.begin(), pts.end());
    std::vector<RationalInterval> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j)
            out.push_back(RationalInterval::closed(pts[i], pts[j]));
    return out;
}

std::optional<PLShyWitness> pl_shy_witness(const PLFunction& f) {
    if (f.circular()) throw ShapeError("interval-domain decider applied to a circular function");
    for (const auto& A : shy_test_intervals(f)) {
        IntervalUnion u = preimage_interval(f, A);
        if (u.size() != 1) return PLShyWitness{A, u};
    }
    return std::nullopt;
}

bool is_shy_pl(const PLFunction& f) { return !pl_shy_witness(f).has_value(); }

std::optional<PLShyWitness> circle_pl_shy_witness(const PLFunction& f) {
    if (!f.circular()) throw ShapeError("circle-domain decider applied to an interval function");
    for (const auto& A : shy_test_intervals(f)) {
        IntervalUnion u = preimage_interval(f, A);
        std::size_t n = u.size();
        // the domain's ends are one circle point, so parts meeting both ends
        // are really one part
        bool wraps = n >= 2 && u.parts().front().contains(f.domain_lo()) &&
                     u.parts().back().contains(f.domain_hi());
        if ((wraps ? n - 1 : n) > 1) return PLShyWitness{A, u};
    }
    return std::nullopt;
}

bool is_shy_circle_pl(const PLFunction& f) { return !circle_pl_shy_witness(f).has_value(); }

AngleMap::AngleMap(PLFunction pl) : pl_(std::move(pl)) {
    if (pl_.circular()) throw ShapeError("angle maps are defined on an interval domain");
}

Rat AngleMap::total_variation() const {
    const auto& b = pl_.breakpoints();
    Rat tv(0);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) tv += rat_abs(b[i + 1].y - b[i].y);
    return tv;
}

bool AngleMap::strictly_monotone() const {
    const auto& b = pl_.breakpoints();
    bool up = true, down = true;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (b[i].y >= b[i + 1].y) up = false;
        if (b[i].y <= b[i + 1].y) down = false;
    }
    return up || down;
}

Arc::Arc(const Rat& from, const Rat& to, bool from_closed, bool to_closed)
    : start_(from), length_(to - from), start_closed_(from_closed), end_closed_(to_closed) {
    if (length_ < Rat(0) || length_ > Rat(1))
        throw DomainError("an arc runs counterclockwise over at most one turn");
    if (length_ == Rat(0) && !(from_closed && to_closed))
        throw DomainError("a degenerate arc must be closed");
    start_ -= Rat(rat_floor(start_));
}

bool Arc::contains(const Rat& angle) const {
    Rat t = angle - Rat(rat_floor(angle - start_));  // representative in [start, start+1)
    if (t == start_) return start_closed_ || (length_ == Rat(1) && end_closed_);
    if (t < start_ + length_) return true;
    if (t == start_ + length_) return end_closed_;
    return false;
}

IntervalUnion arc_preimage(const AngleMap& m, const Arc& A) {
    IntervalUnion out;
    const auto& b = m.pl().breakpoints();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const Rat &x0 = b[i].x, &x1 = b[i + 1].x, &y0 = b[i].y, &y1 = b[i + 1].y;
        if (y0 == y1) {
            if (A.contains(y0)) out.add(RationalInterval::closed(x0, x1));
            continue;
        }
        Rat vlo = std::min(y0, y1), vhi = std::max(y0, y1);
        RationalInterval range = RationalInterval::closed(vlo, vhi);
        // every integer lift of the arc that can reach this piece's values
        long long klo = rat_floor(vlo - A.start() - A.length()) - 1;
        long long khi = rat_floor(vhi - A.start()) + 1;
        for (long long k = klo; k <= khi; ++k) {
            RationalInterval lift{A.start() + Rat(k), A.start() + Rat(k) + A.length(),
                                  A.start_closed(), A.end_closed()};
            if (auto B = intersect(lift, range)) add_piece_solutions(x0, x1, y0, y1, *B, out);
        }
    }
    return out;
}

bool is_shy_interval_to_circle(const AngleMap& m) {
    if (!m.strictly_monotone() || m.total_variation() >= Rat(1))
        throw UnsupportedRegimeError(
            "supported regime: strictly monotone angles with total variation under one turn");
    std::vector<Rat> angles;
    for (const auto& bp : m.pl().breakpoints()) angles.push_back(bp.y);
    std::sort(angles.begin(), angles.end());
    std::vector<Rat> pts = angles;
    for (std::size_t i = 0; i + 1 < angles.size(); ++i)
        pts.push_back((angles[i] + angles[i + 1]) / 2);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j)
            if (arc_preimage(m, Arc(pts[i], pts[j], true, true)).size() != 1) return false;
    return true;
}

}  // namespace shylab
