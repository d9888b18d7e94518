#ifndef SHYLAB_GENERATORS_HPP
#define SHYLAB_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <random>

#include "shylab/digital_maps.hpp"
#include "shylab/pl_real.hpp"

namespace shylab {

// Seeded randomness for the suites. All draws go through these helpers
// (never through distribution objects, whose output varies by standard
// library), so the same seed gives the same cases everywhere.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    bool coin() { return next() % 2 == 0; }
    // Uniform over [lo, hi], inclusive.
    long long uniform(long long lo, long long hi);
    // Random p/q with value in [lo, hi] and denominator in [1, max_den].
    Rat rational(long long lo, long long hi, long long max_den);

private:
    std::mt19937_64 rng_;
};

// Every total map from dom to cod, by table odometer.
void for_each_map(const DigitalImage& dom, const DigitalImage& cod,
                  const std::function<void(const DigitalMap&)>& visit);

// Every continuous map, enumerated with edge-constraint pruning (far fewer
// candidates than the full odometer).
void for_each_continuous_map(const DigitalImage& dom, const DigitalImage& cod,
                             const std::function<void(const DigitalMap&)>& visit);

// Small random image: usually a tree plus chords (connected), sometimes a
// sprinkling of 2-D lattice points under c_1 or c_2; may be disconnected.
DigitalImage random_image(RandomSource& rs, int max_size);
DigitalImage random_connected_image(RandomSource& rs, int max_size);

// Random continuous map, grown continuity-first over a traversal of the
// domain; falls back to a constant map when the greedy growth jams.
DigitalMap random_continuous_map(RandomSource& rs, const DigitalImage& dom,
                                 const DigitalImage& cod);
DigitalMap random_pointed_continuous_map(RandomSource& rs, const DigitalImage& dom,
                                         const DigitalImage& cod, int base_dom, int base_cod);

// A shy surjection ONTO cod: blow each codomain point up into a connected
// cluster, wire adjacent clusters together, and project. Fibers are the
// clusters and every adjacent pair of clusters shares an edge, so the
// result is shy by construction.
DigitalMap random_shy_surjection_onto(RandomSource& rs, const DigitalImage& cod, int max_cluster);

// A shy surjection FROM dom: merge random connected clusters of dom into
// single points of a fresh quotient image and project.
DigitalMap random_quotient_map(RandomSource& rs, const DigitalImage& dom, int max_cluster);

// Random PL function with small rational coordinates (denominators <= 12),
// biased so monotone/constant cases appear often enough to matter.
PLFunction random_pl_function(RandomSource& rs, int max_breakpoints, bool circular);

// The degree-1 workhorse C_m -> C_n (m >= n >= 3): walk the codomain cycle
// once, then rest at the last point; shy, degree 1.
DigitalMap standard_wrap(int m, int n);
// Rotation by k and reflection on an explicit cycle.
DigitalMap rotation_map(const DigitalImage& cycle, int k);
DigitalMap reflection_map(const DigitalImage& cycle);

}  // namespace shylab

#endif
