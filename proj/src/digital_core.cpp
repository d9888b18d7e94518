#include "shylab/digital_core.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "shylab/errors.hpp"

namespace shylab {

std::string point_to_string(const LatticePoint& p) {
    std::string s = "(";
    for (int i = 0; i < p.dim(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.coords[i]);
    }
    return s + ")";
}

namespace {

bool cu_adjacent(const LatticePoint& p, const LatticePoint& q, int u) {
    int changed = 0;
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        int d = p.coords[i] - q.coords[i];
        if (d < -1 || d > 1) return false;
        if (d != 0) ++changed;
    }
    return changed >= 1 && changed <= u;
}

}  // namespace

DigitalImage::DigitalImage(std::vector<LatticePoint> points, AdjacencySpec adjacency)
    : points_(std::move(points)), spec_(std::move(adjacency)) {
    dim_ = points_.empty() ? 0 : points_[0].dim();
    for (const auto& p : points_)
        if (p.dim() != dim_) throw DomainError("all points of an image must share one dimension");
    {
        auto sorted = points_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainError("image points must be pairwise distinct");
    }

    const int n = size();
    neighbors_.assign(n, {});
    if (const auto* cu = std::get_if<CuAdjacency>(&spec_)) {
        if (!points_.empty() && (cu->u < 1 || cu->u > dim_))
            throw DomainError("c_u adjacency requires 1 <= u <= dimension");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (cu_adjacent(points_[i], points_[j], cu->u)) {
                    neighbors_[i].push_back(j);
                    neighbors_[j].push_back(i);
                    edges_.emplace_back(i, j);
                }
    } else {
        const auto& ee = std::get<ExplicitEdges>(spec_);
        std::vector<std::pair<int, int>> canon;
        for (auto [a, b] : ee.edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw DomainError("edge endpoint index out of range");
            if (a == b) throw DomainError("adjacency must be irreflexive");
            canon.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        edges_ = std::move(canon);
        for (auto [a, b] : edges_) {
            neighbors_[a].push_back(b);
            neighbors_[b].push_back(a);
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
    }
}

int DigitalImage::index_of(const LatticePoint& p) const {
    for (int i = 0; i < size(); ++i)
        if (points_[i] == p) return i;
    return -1;
}

bool DigitalImage::adjacent_indices(int i, int j) const {
    const auto& nb = neighbors_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool DigitalImage::operator==(const DigitalImage& other) const {
    return dim_ == other.dim_ && points_ == other.points_ && edges_ == other.edges_;
}

int enumeration_limit() {
    static const int limit = [] {
        if (const char* env = std::getenv("SHYLAB_MAX_ORACLE")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 15;
    }();
    return limit;
}

bool are_adjacent(const DigitalImage& img, const LatticePoint& p, const LatticePoint& q) {
    int i = img.index_of(p);
    int j = img.index_of(q);
    if (i < 0 || j < 0) throw DomainError("are_adjacent: point not in image");
    return i != j && img.adjacent_indices(i, j);
}

namespace {

void check_subset(const DigitalImage& img, std::span<const int> S) {
    for (int i : S)
        if (i < 0 || i >= img.size()) throw DomainError("subset index out of range");
}

}  // namespace

bool is_connected_subset(const DigitalImage& img, std::span<const int> S) {
    check_subset(img, S);
    if (S.size() <= 1) return true;
    std::vector<int> sorted(S.begin(), S.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<int> stack{sorted[0]};
    std::vector<bool> seen(img.size(), false);
    seen[sorted[0]] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : img.neighbors(v)) {
            if (seen[w] || !std::binary_search(sorted.begin(), sorted.end(), w)) continue;
            seen[w] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == sorted.size();
}

bool is_connected_subset(const DigitalImage& img, const std::vector<LatticePoint>& S) {
    std::vector<int> idx;
    idx.reserve(S.size());
    for (const auto& p : S) {
        int i = img.index_of(p);
        if (i < 0) throw DomainError("is_connected_subset: point not in image");
        idx.push_back(i);
    }
    return is_connected_subset(img, idx);
}

std::vector<std::vector<int>> connected_components(const DigitalImage& img, std::span<const int> S) {
    check_subset(img, S);
    std::vector<int> sorted(S.begin(), S.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<bool> seen(img.size(), false);
    std::vector<std::vector<int>> parts;
    for (int root : sorted) {
        if (seen[root]) continue;
        seen[root] = true;
        std::vector<int> part{root};
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : img.neighbors(v)) {
                if (seen[w] || !std::binary_search(sorted.begin(), sorted.end(), w)) continue;
                seen[w] = true;
                part.push_back(w);
                stack.push_back(w);
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

namespace {

// Enumeration core. Subsets are bitmasks over positions in the sorted local
// element list. Each connected subset is produced exactly once, rooted at
// its minimum element: at root i all smaller elements are banned, and within
// a recursion level each frontier vertex is banned after its branch, so no
// powerset bookkeeping is needed.
struct SubsetEnum {
    const std::vector<int>& elems;              // sorted image indices
    const std::vector<std::uint64_t>& adj;      // local adjacency masks
    const std::function<bool(const std::vector<int>&)>& visit;
    std::optional<std::uint64_t> cap;
    std::uint64_t emitted = 0;
    bool stopped = false;

    bool emit(std::uint64_t cur) {
        std::vector<int> subset;
        for (std::size_t b = 0; b < elems.size(); ++b)
            if (cur & (1ULL << b)) subset.push_back(elems[b]);
        ++emitted;
        if (!visit(subset)) return false;
        return !(cap && emitted >= *cap);
    }

    void grow(std::uint64_t cur, std::uint64_t cur_nbrs, std::uint64_t banned) {
        if (stopped) return;
        if (!emit(cur)) {
            stopped = true;
            return;
        }
        std::uint64_t frontier = cur_nbrs & ~cur & ~banned;
        while (frontier) {
            std::uint64_t w = frontier & (~frontier + 1);  // lowest set bit
            frontier &= frontier - 1;
            int wi = std::countr_zero(w);
            grow(cur | w, cur_nbrs | adj[wi], banned);
            if (stopped) return;
            banned |= w;
        }
    }
};

}  // namespace

void for_each_connected_subset(const DigitalImage& img, std::span<const int> S,
                               std::optional<std::uint64_t> cap,
                               const std::function<bool(const std::vector<int>&)>& visit) {
    check_subset(img, S);
    std::vector<int> elems(S.begin(), S.end());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    const int k = static_cast<int>(elems.size());
    if (k > enumeration_limit() && !cap)
        throw SizeError("connected-subset enumeration over " + std::to_string(k) +
                        " points exceeds the limit of " + std::to_string(enumeration_limit()) +
                        " (set SHYLAB_MAX_ORACLE to raise it)");
    if (k > 63) throw SizeError("connected-subset enumeration supports at most 63 points");
    if (k == 0) return;

    std::vector<std::uint64_t> adj(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (img.adjacent_indices(elems[a], elems[b])) {
                adj[a] |= 1ULL << b;
                adj[b] |= 1ULL << a;
            }

    SubsetEnum en{elems, adj, visit, cap};
    for (int i = 0; i < k && !en.stopped; ++i) {
        std::uint64_t banned = (1ULL << i) - 1;  // subsets rooted at their minimum
        en.grow(1ULL << i, adj[i], banned);
    }
}

std::vector<std::vector<int>> enumerate_connected_subsets(const DigitalImage& img,
                                                          std::span<const int> S,
                                                          std::optional<std::uint64_t> cap) {
    std::vector<std::vector<int>> out;
    for_each_connected_subset(img, S, cap, [&](const std::vector<int>& subset) {
        out.push_back(subset);
        return true;
    });
    return out;
}

std::vector<int> all_indices(const DigitalImage& img) {
    std::vector<int> idx(img.size());
    for (int i = 0; i < img.size(); ++i) idx[i] = i;
    return idx;
}

}  // namespace shylab
