#include "shylab/shapes.hpp"

#include "shylab/errors.hpp"

namespace shylab {

DigitalImage make_interval(int a, int b) {
    if (a > b) throw DomainError("make_interval: a must be <= b");
    std::vector<LatticePoint> pts;
    for (int x = a; x <= b; ++x) pts.push_back(LatticePoint{x});
    return DigitalImage(std::move(pts), CuAdjacency{1});
}

DigitalImage make_path(int n) {
    if (n < 1) throw DomainError("make_path: need at least one point");
    return make_interval(0, n - 1);
}

DigitalImage make_cycle(int n) {
    if (n < 3) throw DomainError("make_cycle: need at least three points");
    std::vector<LatticePoint> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        pts.push_back(LatticePoint{i});
        edges.emplace_back(i, (i + 1) % n);
    }
    return DigitalImage(std::move(pts), ExplicitEdges{std::move(edges)});
}

DigitalImage make_star(int rays, int len) {
    if (rays < 1 || len < 1) throw DomainError("make_star: need rays >= 1 and len >= 1");
    std::vector<LatticePoint> pts{LatticePoint{0}};
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rays; ++r) {
        int prev = 0;
        for (int k = 0; k < len; ++k) {
            int idx = static_cast<int>(pts.size());
            pts.push_back(LatticePoint{idx});
            edges.emplace_back(prev, idx);
            prev = idx;
        }
    }
    return DigitalImage(std::move(pts), ExplicitEdges{std::move(edges)});
}

}  // namespace shylab
