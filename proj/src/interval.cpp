#include "shylab/interval.hpp"

#include <algorithm>

#include "shylab/errors.hpp"

namespace shylab {

RationalInterval::RationalInterval(Rat lo_, Rat hi_, bool lo_closed_, bool hi_closed_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_), hi_closed(hi_closed_) {
    if (lo > hi) throw DomainError("interval endpoints out of order");
    if (lo == hi && !(lo_closed && hi_closed))
        throw DomainError("degenerate interval must be closed at both ends");
}

bool RationalInterval::contains(const Rat& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

std::string interval_to_string(const RationalInterval& iv) {
    std::string s = iv.lo_closed ? "[" : "(";
    s += rat_to_string(iv.lo) + ", " + rat_to_string(iv.hi);
    s += iv.hi_closed ? "]" : ")";
    return s;
}

std::optional<RationalInterval> intersect(const RationalInterval& a, const RationalInterval& b) {
    Rat lo = std::max(a.lo, b.lo);
    Rat hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    bool lo_closed = (a.lo == lo ? a.lo_closed : true) && (b.lo == lo ? b.lo_closed : true);
    bool hi_closed = (a.hi == hi ? a.hi_closed : true) && (b.hi == hi ? b.hi_closed : true);
    if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
    return RationalInterval(lo, hi, lo_closed, hi_closed);
}

IntervalUnion::IntervalUnion(std::vector<RationalInterval> parts) : parts_(std::move(parts)) {
    normalize();
}

void IntervalUnion::add(const RationalInterval& iv) {
    parts_.push_back(iv);
    normalize();
}

bool IntervalUnion::contains(const Rat& x) const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [&](const RationalInterval& p) { return p.contains(x); });
}

void IntervalUnion::normalize() {
    if (parts_.size() < 2) return;
    std::sort(parts_.begin(), parts_.end(), [](const RationalInterval& a, const RationalInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;  // closed end first at equal lo
    });
    std::vector<RationalInterval> merged;
    merged.push_back(parts_.front());
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        RationalInterval& cur = merged.back();
        const RationalInterval& nxt = parts_[i];
        bool joins = nxt.lo < cur.hi || (nxt.lo == cur.hi && (cur.hi_closed || nxt.lo_closed));
        if (!joins) {
            merged.push_back(nxt);
            continue;
        }
        if (nxt.hi > cur.hi) {
            cur.hi = nxt.hi;
            cur.hi_closed = nxt.hi_closed;
        } else if (nxt.hi == cur.hi) {
            cur.hi_closed = cur.hi_closed || nxt.hi_closed;
        }
    }
    parts_ = std::move(merged);
}

std::string interval_union_to_string(const IntervalUnion& u) {
    if (u.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < u.parts().size(); ++i) {
        if (i) s += ", ";
        s += interval_to_string(u.parts()[i]);
    }
    return s + "}";
}

}  // namespace shylab
