#ifndef SHYLAB_DIGITAL_MAPS_HPP
#define SHYLAB_DIGITAL_MAPS_HPP

#include <vector>

#include "shylab/digital_core.hpp"

namespace shylab {

// A total function between digital images, tabulated by point index.
class DigitalMap {
public:
    DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<int> table);

    const DigitalImage& domain() const { return domain_; }
    const DigitalImage& codomain() const { return codomain_; }
    const std::vector<int>& table() const { return table_; }

    int apply_index(int i) const { return table_[i]; }
    LatticePoint apply(const LatticePoint& p) const;

    // Sorted codomain indices with nonempty fiber.
    std::vector<int> image_indices() const;
    // Sorted domain indices mapping into the given codomain index set.
    std::vector<int> preimage_indices(std::span<const int> codomain_set) const;

    bool operator==(const DigitalMap&) const = default;

private:
    DigitalImage domain_;
    DigitalImage codomain_;
    std::vector<int> table_;
};

// Shyness verdict. The witness is a connected subset of f(X), given by
// codomain indices, whose preimage (also recorded) is disconnected; both
// empty exactly when the map is shy.
struct ShyVerdict {
    bool shy = true;
    std::vector<int> witness;
    std::vector<int> witness_preimage;
};

// Edge-preservation continuity: adjacent domain points map to equal or
// adjacent codomain points. Equivalent to the connected-image definition,
// which is_continuous_oracle checks independently.
bool is_continuous(const DigitalMap& f);

// Connected-image continuity over every connected subset of the domain.
bool is_continuous_oracle(const DigitalMap& f);

bool is_surjective(const DigitalMap& f);

// Characterization-based decider: all fibers over image points connected,
// and all pair preimages over adjacent image points connected. Pairs with
// an endpoint outside the image are ignored. Requires a continuous map.
ShyVerdict is_shy(const DigitalMap& f);

// Brute-force decider: the preimage of every nonempty connected subset of
// f(X) must be connected. On failure the witness is the violating subset of
// minimum cardinality, ties broken by lexicographic point order.
ShyVerdict shy_oracle(const DigitalMap& f);

// Number of connected components of domain minus {r} on which f is not
// identically f(r). Requires a shy map from a connected domain into a
// digital interval.
int cut_point_audit(const DigitalMap& f, const LatticePoint& r);

// Winding number of a continuous map between cycle graphs: net signed unit
// steps around the codomain per domain traversal, divided by the codomain
// length.
int degree_of_cycle_map(const DigitalMap& f);

// Whether the induced map on cycle fundamental groups (multiplication by
// the degree) is onto, i.e. |degree| == 1.
bool pi1_surjectivity_cycle(const DigitalMap& f);

// Identity and constant helpers used throughout suites and tests.
DigitalMap identity_map(const DigitalImage& img);
DigitalMap constant_map(const DigitalImage& domain, const DigitalImage& codomain, int value_index);

// True when img is a cycle graph: connected, every vertex of degree 2.
bool is_cycle_graph(const DigitalImage& img);

// True when img is a digital interval: consecutive 1-D points with c_1
// adjacency (in any representation realizing that graph).
bool is_digital_interval(const DigitalImage& img);

}  // namespace shylab

#endif
