#ifndef SHYLAB_KHALIMSKY_HPP
#define SHYLAB_KHALIMSKY_HPP

#include <string>
#include <vector>

#include "shylab/interval.hpp"
#include "shylab/rational.hpp"
#include "shylab/report.hpp"

namespace shylab {

// Integer interval [a, b]. On the Khalimsky line (odd points open, even
// points with smallest neighborhood {z-1, z, z+1}) the connected subsets
// are exactly the runs of consecutive integers: a missing integer splits a
// set into two pieces that are clopen in the subspace, while consecutive
// integers can never be separated because one of them lies in every
// neighborhood of the other.
struct KhalimskyInterval {
    long long a;
    long long b;

    KhalimskyInterval(long long a_, long long b_);

    long long length() const { return b - a; }
    bool operator==(const KhalimskyInterval& other) const = default;
};

std::string khalimsky_interval_to_string(const KhalimskyInterval& k);

// Quotient of the real line onto the Khalimsky line: even integers map to
// themselves, every other real to the unique odd integer within distance 1.
long long q_value(const Rat& x);

// q^{-1}(z): the closed point [z, z] for even z, the open (z-1, z+1) for odd z.
RationalInterval q_fiber(long long z);

// Union of the fibers over [a, b] as one interval: an end is pushed out by 1
// and left open when the extreme integer is odd, kept closed when even.
RationalInterval q_preimage_interval(const KhalimskyInterval& k);

// Connectivity on the Khalimsky line: true iff the values form a run of
// consecutive integers (duplicates allowed; empty and singletons connected).
bool khalimsky_connected(const std::vector<long long>& s);

// Coordinatewise q on a rational vector.
std::vector<long long> qn_value(const std::vector<Rat>& x);

// Sweeps every integer interval inside [-n, n] and checks that the union of
// fibers over it collapses to a single rational interval that matches
// q_preimage_interval exactly. (2n+1)(2n+2)/2 cases.
SuiteReport verify_q_shy_window(long long n);

// Same sweep for the coordinatewise quotient on boxes: every product of
// integer intervals inside the given per-axis window must pull back to a
// product of single intervals. Dimension <= 3 and axis length <= 20.
SuiteReport verify_qn_shy_boxes(const std::vector<KhalimskyInterval>& window);

}  // namespace shylab

#endif
