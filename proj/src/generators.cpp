#include "shylab/generators.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>

#include "shylab/errors.hpp"
#include "shylab/shapes.hpp"

namespace shylab {

long long RandomSource::uniform(long long lo, long long hi) {
    if (lo > hi) throw PreconditionError("RandomSource::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(next());
    return lo + static_cast<long long>(next() % span);
}

Rat RandomSource::rational(long long lo, long long hi, long long max_den) {
    long long den = uniform(1, max_den);
    long long num = uniform(lo * den, hi * den);
    return Rat(num, den);
}

void for_each_map(const DigitalImage& dom, const DigitalImage& cod,
                  const std::function<void(const DigitalMap&)>& visit) {
    int n = dom.size();
    int m = cod.size();
    std::vector<int> table(static_cast<std::size_t>(n), 0);
    for (;;) {
        visit(DigitalMap(dom, cod, table));
        int i = 0;
        while (i < n && ++table[i] == m) {
            table[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
}

void for_each_continuous_map(const DigitalImage& dom, const DigitalImage& cod,
                             const std::function<void(const DigitalMap&)>& visit) {
    int n = dom.size();
    int m = cod.size();
    // Neighbors already assigned when index v gets its value; edges() is
    // canonical with first < second.
    std::vector<std::vector<int>> prior(n);
    for (auto [a, b] : dom.edges()) prior[b].push_back(a);
    std::vector<int> table(static_cast<std::size_t>(n), -1);
    std::function<void(int)> extend = [&](int v) {
        if (v == n) {
            visit(DigitalMap(dom, cod, table));
            return;
        }
        for (int c = 0; c < m; ++c) {
            bool ok = true;
            for (int u : prior[v]) {
                if (table[u] != c && !cod.adjacent_indices(table[u], c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            table[v] = c;
            extend(v + 1);
        }
        table[v] = -1;
    };
    extend(0);
}

DigitalImage random_image(RandomSource& rs, int max_size) {
    if (max_size < 1) throw PreconditionError("random_image: max_size must be >= 1");
    if (rs.uniform(0, 3) == 0) {
        // Scatter points over a 3x3 patch of Z^2 under c_1 or c_2.
        int u = static_cast<int>(rs.uniform(1, 2));
        int want = static_cast<int>(rs.uniform(1, std::min(max_size, 9)));
        std::vector<int> cells{0, 1, 2, 3, 4, 5, 6, 7, 8};
        for (int i = 8; i > 0; --i) {
            int j = static_cast<int>(rs.uniform(0, i));
            std::swap(cells[i], cells[j]);
        }
        std::vector<LatticePoint> pts;
        for (int i = 0; i < want; ++i) pts.push_back(LatticePoint{cells[i] / 3, cells[i] % 3});
        std::sort(pts.begin(), pts.end());
        return DigitalImage(std::move(pts), CuAdjacency{u});
    }
    // A 1-D labelled graph: random tree with occasional dropped branches
    // (allowing disconnection) plus a few chords.
    int n = static_cast<int>(rs.uniform(1, max_size));
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(LatticePoint{i});
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        int p = static_cast<int>(rs.uniform(0, i - 1));
        bool drop = rs.uniform(0, 7) == 0;
        if (!drop) edges.emplace_back(p, i);
    }
    long long extra = rs.uniform(0, std::max(1, n / 2));
    for (long long e = 0; e < extra; ++e) {
        int a = static_cast<int>(rs.uniform(0, n - 1));
        int b = static_cast<int>(rs.uniform(0, n - 1));
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return DigitalImage(std::move(pts), ExplicitEdges{std::move(edges)});
}

DigitalImage random_connected_image(RandomSource& rs, int max_size) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        DigitalImage img = random_image(rs, max_size);
        if (is_connected_subset(img, all_indices(img))) return img;
    }
    return make_path(static_cast<int>(rs.uniform(1, max_size)));
}

namespace {

// Assign values along a BFS traversal, each choice compatible with the
// already-assigned neighbors; a jam falls back to a constant map.
DigitalMap grow_continuous(RandomSource& rs, const DigitalImage& dom, const DigitalImage& cod,
                           std::optional<std::pair<int, int>> pin) {
    int n = dom.size();
    int m = cod.size();
    int root = pin ? pin->first : static_cast<int>(rs.uniform(0, n - 1));
    int fallback_value = pin ? pin->second : static_cast<int>(rs.uniform(0, m - 1));
    std::vector<int> table(static_cast<std::size_t>(n), -1);
    if (pin) table[pin->first] = pin->second;

    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> bfs;
    auto enqueue = [&](int v) {
        if (!seen[v]) {
            seen[v] = 1;
            bfs.push(v);
        }
    };
    enqueue(root);
    int scan = 0;
    while (static_cast<int>(order.size()) < n) {
        if (bfs.empty()) {
            while (seen[scan]) ++scan;
            enqueue(scan);
        }
        int v = bfs.front();
        bfs.pop();
        order.push_back(v);
        for (int w : dom.neighbors(v)) enqueue(w);
    }

    for (int v : order) {
        if (table[v] >= 0) continue;
        std::vector<int> cands;
        for (int c = 0; c < m; ++c) {
            bool ok = true;
            for (int u : dom.neighbors(v)) {
                if (table[u] >= 0 && table[u] != c && !cod.adjacent_indices(table[u], c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) cands.push_back(c);
        }
        if (cands.empty()) return constant_map(dom, cod, fallback_value);
        table[v] = cands[static_cast<std::size_t>(
            rs.uniform(0, static_cast<long long>(cands.size()) - 1))];
    }
    return DigitalMap(dom, cod, std::move(table));
}

void require_cycle_order(const DigitalImage& cycle, const char* who) {
    int n = cycle.size();
    if (n < 3 || !is_cycle_graph(cycle))
        throw PreconditionError(std::string(who) + ": image is not a cycle graph");
    for (int i = 0; i < n; ++i)
        if (!cycle.adjacent_indices(i, (i + 1) % n))
            throw PreconditionError(std::string(who) + ": point indices are not in cycle order");
}

}  // namespace

DigitalMap random_continuous_map(RandomSource& rs, const DigitalImage& dom,
                                 const DigitalImage& cod) {
    return grow_continuous(rs, dom, cod, std::nullopt);
}

DigitalMap random_pointed_continuous_map(RandomSource& rs, const DigitalImage& dom,
                                         const DigitalImage& cod, int base_dom, int base_cod) {
    if (base_dom < 0 || base_dom >= dom.size() || base_cod < 0 || base_cod >= cod.size())
        throw PreconditionError("random_pointed_continuous_map: basepoint index out of range");
    return grow_continuous(rs, dom, cod, std::make_pair(base_dom, base_cod));
}

DigitalMap random_shy_surjection_onto(RandomSource& rs, const DigitalImage& cod, int max_cluster) {
    if (max_cluster < 1)
        throw PreconditionError("random_shy_surjection_onto: max_cluster must be >= 1");
    int m = cod.size();
    std::vector<int> base(static_cast<std::size_t>(m), 0);
    std::vector<int> sz(static_cast<std::size_t>(m), 0);
    int total = 0;
    for (int c = 0; c < m; ++c) {
        base[c] = total;
        sz[c] = static_cast<int>(rs.uniform(1, max_cluster));
        total += sz[c];
    }
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) pts.push_back(LatticePoint{i});
    std::vector<std::pair<int, int>> edges;
    std::vector<int> table(static_cast<std::size_t>(total), 0);
    for (int c = 0; c < m; ++c) {
        for (int k = 0; k < sz[c]; ++k) table[base[c] + k] = c;
        for (int k = 1; k < sz[c]; ++k) {
            int p = static_cast<int>(rs.uniform(0, k - 1));
            edges.emplace_back(base[c] + p, base[c] + k);
        }
    }
    // At least one wire across every codomain edge keeps pair preimages
    // connected; extra wires add variety without breaking anything.
    for (auto [c, d] : cod.edges()) {
        long long wires = rs.uniform(1, 2);
        for (long long w = 0; w < wires; ++w) {
            int a = base[c] + static_cast<int>(rs.uniform(0, sz[c] - 1));
            int b = base[d] + static_cast<int>(rs.uniform(0, sz[d] - 1));
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    DigitalImage dom(std::move(pts), ExplicitEdges{std::move(edges)});
    return DigitalMap(std::move(dom), cod, std::move(table));
}

DigitalMap random_quotient_map(RandomSource& rs, const DigitalImage& dom, int max_cluster) {
    if (max_cluster < 1) throw PreconditionError("random_quotient_map: max_cluster must be >= 1");
    int n = dom.size();
    std::vector<int> cluster_of(static_cast<std::size_t>(n), -1);
    int k = 0;
    for (int seed = 0; seed < n; ++seed) {
        if (cluster_of[seed] >= 0) continue;
        int cid = k++;
        cluster_of[seed] = cid;
        std::vector<int> members{seed};
        long long want = rs.uniform(1, max_cluster);
        while (static_cast<long long>(members.size()) < want) {
            std::vector<int> frontier;
            for (int v : members)
                for (int w : dom.neighbors(v))
                    if (cluster_of[w] < 0) frontier.push_back(w);
            std::sort(frontier.begin(), frontier.end());
            frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
            if (frontier.empty()) break;
            int pick = frontier[static_cast<std::size_t>(
                rs.uniform(0, static_cast<long long>(frontier.size()) - 1))];
            cluster_of[pick] = cid;
            members.push_back(pick);
        }
    }
    std::vector<LatticePoint> qpts;
    qpts.reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) qpts.push_back(LatticePoint{c});
    std::vector<std::pair<int, int>> qedges;
    for (auto [a, b] : dom.edges()) {
        int ca = cluster_of[a];
        int cb = cluster_of[b];
        if (ca != cb) qedges.emplace_back(std::min(ca, cb), std::max(ca, cb));
    }
    DigitalImage quotient(std::move(qpts), ExplicitEdges{std::move(qedges)});
    return DigitalMap(dom, std::move(quotient), std::move(cluster_of));
}

PLFunction random_pl_function(RandomSource& rs, int max_breakpoints, bool circular) {
    if (max_breakpoints < 2)
        throw PreconditionError("random_pl_function: need at least two breakpoints");
    int k = static_cast<int>(rs.uniform(2, max_breakpoints));
    std::vector<PLBreakpoint> bps(static_cast<std::size_t>(k));
    Rat x = rs.rational(-2, 2, 12);
    for (int i = 0; i < k; ++i) {
        bps[i].x = x;
        x += Rat(rs.uniform(1, 24), 12);
        bps[i].y = rs.rational(-3, 3, 12);
    }
    // Bias toward the interesting verdicts: constants and monotone runs
    // would almost never appear in a uniform draw.
    long long style = rs.uniform(0, 5);
    if (style == 0) {
        for (int i = 1; i < k; ++i) bps[i].y = bps[0].y;
    } else if (!circular && style <= 2) {
        std::vector<Rat> ys;
        ys.reserve(bps.size());
        for (const auto& b : bps) ys.push_back(b.y);
        std::sort(ys.begin(), ys.end());
        if (style == 2) std::reverse(ys.begin(), ys.end());
        for (int i = 0; i < k; ++i) bps[i].y = ys[i];
    }
    if (circular) bps.back().y = bps.front().y;
    return PLFunction(std::move(bps), circular);
}

DigitalMap standard_wrap(int m, int n) {
    if (n < 3 || m < n) throw PreconditionError("standard_wrap: need m >= n >= 3");
    std::vector<int> table(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) table[i] = std::min(i, n - 1);
    return DigitalMap(make_cycle(m), make_cycle(n), std::move(table));
}

DigitalMap rotation_map(const DigitalImage& cycle, int k) {
    require_cycle_order(cycle, "rotation_map");
    int n = cycle.size();
    int kk = ((k % n) + n) % n;
    std::vector<int> table(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) table[i] = (i + kk) % n;
    return DigitalMap(cycle, cycle, std::move(table));
}

DigitalMap reflection_map(const DigitalImage& cycle) {
    require_cycle_order(cycle, "reflection_map");
    int n = cycle.size();
    std::vector<int> table(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) table[i] = (n - i) % n;
    return DigitalMap(cycle, cycle, std::move(table));
}

}  // namespace shylab
