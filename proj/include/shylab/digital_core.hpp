#ifndef SHYLAB_DIGITAL_CORE_HPP
#define SHYLAB_DIGITAL_CORE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace shylab {

// A lattice point in Z^n. The dimension is fixed per image.
struct LatticePoint {
    std::vector<int> coords;

    LatticePoint() = default;
    LatticePoint(std::initializer_list<int> cs) : coords(cs) {}
    explicit LatticePoint(std::vector<int> cs) : coords(std::move(cs)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    auto operator<=>(const LatticePoint&) const = default;
};

std::string point_to_string(const LatticePoint& p);

// c_u adjacency on Z^n: two distinct points are adjacent iff every
// coordinate differs by at most 1 and at most u coordinates differ.
struct CuAdjacency {
    int u = 1;
    bool operator==(const CuAdjacency&) const = default;
};

// Arbitrary symmetric irreflexive relation given as index pairs into the
// image's point list.
struct ExplicitEdges {
    std::vector<std::pair<int, int>> edges;
    bool operator==(const ExplicitEdges&) const = default;
};

using AdjacencySpec = std::variant<CuAdjacency, ExplicitEdges>;

// A finite digital image: points of Z^n plus an adjacency relation, viewed
// as a simple undirected graph. Immutable after construction.
class DigitalImage {
public:
    DigitalImage(std::vector<LatticePoint> points, AdjacencySpec adjacency);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<LatticePoint>& points() const { return points_; }
    const LatticePoint& point(int i) const { return points_[i]; }
    const AdjacencySpec& adjacency_spec() const { return spec_; }

    // -1 when absent.
    int index_of(const LatticePoint& p) const;
    bool adjacent_indices(int i, int j) const;
    const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }
    // Canonical edge list, each pair with first < second, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Images are equal when they have the same points in the same order and
    // realize the same graph; the adjacency spec may differ in form.
    bool operator==(const DigitalImage& other) const;

private:
    int dim_ = 0;
    std::vector<LatticePoint> points_;
    AdjacencySpec spec_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::pair<int, int>> edges_;
};

// Oracle enumeration limit: default 15, overridable via SHYLAB_MAX_ORACLE.
int enumeration_limit();

// True iff p and q are distinct points of img related by its adjacency.
bool are_adjacent(const DigitalImage& img, const LatticePoint& p, const LatticePoint& q);

// Connectivity of the subgraph induced on S (point indices, need not be
// sorted). Empty sets and singletons are connected.
bool is_connected_subset(const DigitalImage& img, std::span<const int> S);
bool is_connected_subset(const DigitalImage& img, const std::vector<LatticePoint>& S);

// Maximal connected pieces of S, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const DigitalImage& img, std::span<const int> S);

// Visits every nonempty connected subset of S exactly once, as a sorted
// index vector. Stops early when the visitor returns false or after cap
// subsets. Throws SizeError when |S| exceeds the enumeration limit and no
// cap bounds the stream.
void for_each_connected_subset(const DigitalImage& img, std::span<const int> S,
                               std::optional<std::uint64_t> cap,
                               const std::function<bool(const std::vector<int>&)>& visit);

// Collecting form of the enumerator.
std::vector<std::vector<int>> enumerate_connected_subsets(const DigitalImage& img,
                                                          std::span<const int> S,
                                                          std::optional<std::uint64_t> cap = {});

// All point indices 0..size-1 of img.
std::vector<int> all_indices(const DigitalImage& img);

}  // namespace shylab

#endif
