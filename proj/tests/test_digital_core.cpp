#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "shylab/digital_core.hpp"
#include "shylab/errors.hpp"
#include "shylab/shapes.hpp"

using namespace shylab;

namespace {

DigitalImage grid2d(int w, int h, int u) {
    std::vector<LatticePoint> pts;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) pts.push_back(LatticePoint{x, y});
    return DigitalImage(std::move(pts), CuAdjacency{u});
}

// Test-only connectivity oracle: reachability closure over the induced
// subgraph, no shared code with the BFS under test.
bool oracle_connected(const DigitalImage& img, const std::vector<int>& S) {
    if (S.size() <= 1) return true;
    size_t k = S.size();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            reach[a][b] = (a == b) || img.adjacent_indices(S[a], S[b]);
    for (size_t m = 0; m < k; ++m)
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b)
                if (reach[a][m] && reach[m][b]) reach[a][b] = true;
    for (size_t b = 0; b < k; ++b)
        if (!reach[0][b]) return false;
    return true;
}

// Powerset-filtering oracle for the subset enumerator.
std::set<std::vector<int>> oracle_connected_subsets(const DigitalImage& img,
                                                    const std::vector<int>& S) {
    std::set<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << S.size()); ++mask) {
        std::vector<int> subset;
        for (size_t b = 0; b < S.size(); ++b)
            if (mask & (1u << b)) subset.push_back(S[b]);
        std::sort(subset.begin(), subset.end());
        if (oracle_connected(img, subset)) out.insert(subset);
    }
    return out;
}

DigitalImage random_explicit_image(std::mt19937_64& rng, int n, int extra_edges) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back(LatticePoint{i});
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < extra_edges; ++i) {
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        if (a != b) edges.emplace_back(a, b);
    }
    return DigitalImage(std::move(pts), ExplicitEdges{std::move(edges)});
}

}  // namespace

TEST_CASE("are_adjacent under c_1 and c_2") {
    auto g1 = grid2d(3, 3, 1);
    CHECK(are_adjacent(g1, LatticePoint{0, 0}, LatticePoint{0, 1}));
    CHECK_FALSE(are_adjacent(g1, LatticePoint{0, 0}, LatticePoint{1, 1}));

    auto g2 = grid2d(3, 3, 2);
    CHECK(are_adjacent(g2, LatticePoint{0, 0}, LatticePoint{1, 1}));
    CHECK_FALSE(are_adjacent(g2, LatticePoint{0, 0}, LatticePoint{2, 1}));

    CHECK_THROWS_AS(are_adjacent(g1, LatticePoint{0, 0}, LatticePoint{9, 9}), DomainError);
    CHECK_FALSE(are_adjacent(g1, LatticePoint{1, 1}, LatticePoint{1, 1}));
}

TEST_CASE("image construction validates invariants") {
    CHECK_THROWS_AS(DigitalImage({LatticePoint{0}, LatticePoint{0}}, CuAdjacency{1}), DomainError);
    CHECK_THROWS_AS(DigitalImage({LatticePoint{0}, LatticePoint{1, 2}}, CuAdjacency{1}), DomainError);
    CHECK_THROWS_AS(DigitalImage({LatticePoint{0}}, CuAdjacency{2}), DomainError);
    CHECK_THROWS_AS(DigitalImage({LatticePoint{0}, LatticePoint{1}}, ExplicitEdges{{{0, 0}}}),
                    DomainError);
    CHECK_THROWS_AS(DigitalImage({LatticePoint{0}, LatticePoint{1}}, ExplicitEdges{{{0, 5}}}),
                    DomainError);
    // duplicate/reversed edges collapse to one canonical edge
    DigitalImage img({LatticePoint{0}, LatticePoint{1}}, ExplicitEdges{{{0, 1}, {1, 0}, {0, 1}}});
    CHECK(img.edges().size() == 1);
}

TEST_CASE("adjacency is symmetric and irreflexive on random images") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        auto img = t % 2 ? random_explicit_image(rng, 2 + t % 7, t)
                         : grid2d(1 + t % 4, 2, 1 + t % 2);
        for (int i = 0; i < img.size(); ++i) {
            CHECK_FALSE(img.adjacent_indices(i, i));
            for (int j = 0; j < img.size(); ++j)
                CHECK(img.adjacent_indices(i, j) == img.adjacent_indices(j, i));
        }
    }
}

TEST_CASE("cu(n) adjacency on Z^n is Chebyshev distance 1") {
    auto g = grid2d(4, 4, 2);
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            int cheb = 0;
            for (int c = 0; c < 2; ++c)
                cheb = std::max(cheb, std::abs(g.point(i).coords[c] - g.point(j).coords[c]));
            CHECK(g.adjacent_indices(i, j) == (cheb == 1));
        }
}

TEST_CASE("is_connected_subset basics") {
    auto g = grid2d(3, 3, 1);
    auto idx = [&](int x, int y) { return g.index_of(LatticePoint{x, y}); };

    CHECK(is_connected_subset(g, std::vector<int>{}));
    CHECK(is_connected_subset(g, std::vector<int>{idx(1, 1)}));
    CHECK_FALSE(is_connected_subset(g, std::vector<int>{idx(0, 0), idx(1, 1)}));
    CHECK(is_connected_subset(g, std::vector<int>{idx(0, 0), idx(1, 0), idx(1, 1)}));
    CHECK_THROWS_AS(is_connected_subset(g, std::vector<int>{99}), DomainError);
    CHECK_THROWS_AS(is_connected_subset(g, {LatticePoint{7, 7}}), DomainError);
}

TEST_CASE("connected_components partitions") {
    auto g = grid2d(4, 1, 1);
    auto whole = connected_components(g, all_indices(g));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == all_indices(g));

    auto idx = [&](int x) { return g.index_of(LatticePoint{x, 0}); };
    auto two = connected_components(g, std::vector<int>{idx(0), idx(2)});
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<int>{idx(0)});
    CHECK(two[1] == std::vector<int>{idx(2)});

    CHECK(connected_components(g, std::vector<int>{}).empty());
}

TEST_CASE("is_connected_subset agrees with component count") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 60; ++t) {
        auto img = random_explicit_image(rng, 2 + t % 8, t % 12);
        std::vector<int> S;
        for (int i = 0; i < img.size(); ++i)
            if (rng() % 2) S.push_back(i);
        CHECK(is_connected_subset(img, S) == (connected_components(img, S).size() <= 1));
        CHECK(is_connected_subset(img, S) == oracle_connected(img, S));
    }
}

TEST_CASE("enumerate_connected_subsets small examples") {
    auto p2 = make_path(2);
    CHECK(enumerate_connected_subsets(p2, all_indices(p2)).size() == 3);

    DigitalImage apart({LatticePoint{0}, LatticePoint{5}}, CuAdjacency{1});
    CHECK(enumerate_connected_subsets(apart, all_indices(apart)).size() == 2);

    auto p1 = make_path(1);
    CHECK(enumerate_connected_subsets(p1, all_indices(p1)).size() == 1);
}

TEST_CASE("enumerator matches powerset filtering up to 6 points") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 80; ++t) {
        int n = 1 + t % 6;
        auto img = random_explicit_image(rng, n, t % 9);
        std::vector<int> S;
        for (int i = 0; i < n; ++i)
            if (rng() % 4) S.push_back(i);
        auto expected = oracle_connected_subsets(img, S);
        auto got = enumerate_connected_subsets(img, S);
        std::set<std::vector<int>> got_set(got.begin(), got.end());
        CHECK(got_set.size() == got.size());  // no duplicates
        CHECK(got_set == expected);
    }
}

TEST_CASE("enumerator cap and size limit") {
    auto p5 = make_path(5);
    auto capped = enumerate_connected_subsets(p5, all_indices(p5), 4);
    CHECK(capped.size() == 4);

    auto big = make_path(enumeration_limit() + 1);
    CHECK_THROWS_AS(enumerate_connected_subsets(big, all_indices(big)), SizeError);
    // with a cap the stream is bounded, so oversized inputs are allowed
    CHECK(enumerate_connected_subsets(big, all_indices(big), 10).size() == 10);
}

TEST_CASE("enumerator early stop via visitor") {
    auto p4 = make_path(4);
    int seen = 0;
    for_each_connected_subset(p4, all_indices(p4), std::nullopt, [&](const std::vector<int>&) {
        ++seen;
        return seen < 3;
    });
    CHECK(seen == 3);
}

TEST_CASE("standard shapes") {
    auto c4 = make_cycle(4);
    CHECK(c4.size() == 4);
    CHECK(c4.edges().size() == 4);
    auto star = make_star(3, 2);
    CHECK(star.size() == 7);
    CHECK(star.neighbors(0).size() == 3);
    auto iv = make_interval(-2, 2);
    CHECK(iv.size() == 5);
    CHECK(iv.edges().size() == 4);
}
