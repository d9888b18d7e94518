#ifndef SHYLAB_RATIONAL_HPP
#define SHYLAB_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace shylab {

// Exact rational arithmetic everywhere; no floating point. Magnitudes stay
// small (denominators <= 12 in generated data), so a 64-bit backing type is
// ample.
using Rat = boost::rational<long long>;

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

inline Rat rat_abs(const Rat& x) { return x < Rat(0) ? -x : x; }

// Largest integer <= x. boost::rational normalizes to a positive
// denominator, so truncation only needs the usual negative adjustment.
long long rat_floor(const Rat& x);

// Smallest integer >= x.
long long rat_ceil(const Rat& x);

// Parses "p/q" or "p" (optional sign, q > 0 after normalization).
Rat parse_rat(const std::string& text);

// "p/q" when the denominator is not 1, else "p".
std::string rat_to_string(const Rat& x);

}  // namespace shylab

#endif
