#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "shylab/digital_maps.hpp"
#include "shylab/errors.hpp"
#include "shylab/generators.hpp"
#include "shylab/shapes.hpp"

using namespace shylab;

TEST_CASE("random source is deterministic per seed and respects bounds") {
    RandomSource a(2026), b(2026), c(99);
    bool diverged = false;
    for (int i = 0; i < 200; ++i) {
        long long va = a.uniform(-5, 17);
        CHECK(va == b.uniform(-5, 17));
        if (va != c.uniform(-5, 17)) diverged = true;
        CHECK(va >= -5);
        CHECK(va <= 17);
    }
    CHECK(diverged);

    RandomSource r(7);
    for (int i = 0; i < 100; ++i) {
        Rat q = r.rational(-2, 3, 12);
        CHECK(q >= Rat(-2));
        CHECK(q <= Rat(3));
        CHECK(q.denominator() <= 12);
    }
    CHECK(r.uniform(4, 4) == 4);
    CHECK_THROWS_AS(r.uniform(3, 2), PreconditionError);
}

TEST_CASE("map enumeration covers every table exactly once") {
    auto p3 = make_path(3);
    std::set<std::vector<int>> seen;
    for_each_map(p3, p3, [&](const DigitalMap& f) { seen.insert(f.table()); });
    CHECK(seen.size() == 27);

    // The pruned enumeration matches filtering the full one by continuity.
    std::set<std::vector<int>> cont_filtered;
    for_each_map(p3, p3, [&](const DigitalMap& f) {
        if (is_continuous(f)) cont_filtered.insert(f.table());
    });
    std::set<std::vector<int>> cont_direct;
    for_each_continuous_map(p3, p3, [&](const DigitalMap& f) {
        CHECK(is_continuous(f));
        cont_direct.insert(f.table());
    });
    CHECK(cont_direct == cont_filtered);

    auto c4 = make_cycle(4);
    int full = 0, cont = 0, direct = 0;
    for_each_map(c4, c4, [&](const DigitalMap& f) {
        ++full;
        if (is_continuous(f)) ++cont;
    });
    for_each_continuous_map(c4, c4, [&](const DigitalMap&) { ++direct; });
    CHECK(full == 256);
    CHECK(direct == cont);
}

TEST_CASE("random images stay within bounds; connected variant is connected") {
    RandomSource rs(11);
    for (int i = 0; i < 200; ++i) {
        auto img = random_image(rs, 8);
        CHECK(img.size() >= 1);
        CHECK(img.size() <= 8);
    }
    bool saw_disconnected = false;
    RandomSource rs2(12);
    for (int i = 0; i < 200; ++i) {
        auto img = random_image(rs2, 8);
        if (!is_connected_subset(img, all_indices(img))) saw_disconnected = true;
    }
    CHECK(saw_disconnected);
    RandomSource rs3(13);
    for (int i = 0; i < 200; ++i) {
        auto img = random_connected_image(rs3, 8);
        CHECK(is_connected_subset(img, all_indices(img)));
    }
}

TEST_CASE("random continuous maps are continuous, pointed ones respect the basepoint") {
    RandomSource rs(21);
    for (int i = 0; i < 300; ++i) {
        auto dom = random_image(rs, 7);
        auto cod = random_image(rs, 5);
        auto f = random_continuous_map(rs, dom, cod);
        CHECK(is_continuous(f));
    }
    RandomSource rs2(22);
    for (int i = 0; i < 200; ++i) {
        auto dom = random_connected_image(rs2, 6);
        auto cod = random_connected_image(rs2, 5);
        int bd = static_cast<int>(rs2.uniform(0, dom.size() - 1));
        int bc = static_cast<int>(rs2.uniform(0, cod.size() - 1));
        auto f = random_pointed_continuous_map(rs2, dom, cod, bd, bc);
        CHECK(is_continuous(f));
        CHECK(f.apply_index(bd) == bc);
    }
}

TEST_CASE("blowup surjections and quotient maps are shy by both deciders") {
    RandomSource rs(31);
    for (int i = 0; i < 150; ++i) {
        auto cod = random_connected_image(rs, 5);
        auto f = random_shy_surjection_onto(rs, cod, 3);
        CHECK(is_continuous(f));
        CHECK(is_surjective(f));
        CHECK(f.codomain() == cod);
        CHECK(is_shy(f).shy);
        CHECK(shy_oracle(f).shy);
    }
    RandomSource rs2(32);
    for (int i = 0; i < 150; ++i) {
        auto dom = random_image(rs2, 7);
        auto g = random_quotient_map(rs2, dom, 3);
        CHECK(is_continuous(g));
        CHECK(is_surjective(g));
        CHECK(g.domain() == dom);
        CHECK(is_shy(g).shy);
        CHECK(shy_oracle(g).shy);
    }
}

TEST_CASE("random PL functions construct cleanly and hit the biased verdicts") {
    RandomSource rs(41);
    int monotone = 0, constant = 0, wiggly = 0;
    for (int i = 0; i < 300; ++i) {
        auto f = random_pl_function(rs, 8, false);
        CHECK(!f.circular());
        CHECK(f.breakpoints().size() >= 2);
        CHECK(f.breakpoints().size() <= 8);
        if (f.min_value() == f.max_value())
            ++constant;
        else if (is_monotone(f))
            ++monotone;
        else
            ++wiggly;
    }
    CHECK(monotone > 10);
    CHECK(constant > 10);
    CHECK(wiggly > 10);

    RandomSource rs2(42);
    int circ_constant = 0, circ_nonconstant = 0;
    for (int i = 0; i < 300; ++i) {
        auto f = random_pl_function(rs2, 8, true);
        CHECK(f.circular());
        (f.min_value() == f.max_value() ? circ_constant : circ_nonconstant)++;
    }
    CHECK(circ_constant > 10);
    CHECK(circ_nonconstant > 10);
}

TEST_CASE("standard wraps, rotations and reflections are shy with degree +-1") {
    // C3 is a complete graph, so winding numbers start at 4-cycles.
    auto w33 = standard_wrap(3, 3);
    CHECK(is_shy(w33).shy);
    for (int n = 4; n <= 6; ++n) {
        for (int m = n; m <= 7; ++m) {
            auto w = standard_wrap(m, n);
            CHECK(is_continuous(w));
            CHECK(is_surjective(w));
            CHECK(is_shy(w).shy);
            CHECK(degree_of_cycle_map(w) == 1);
        }
    }
    auto c5 = make_cycle(5);
    for (int k = 0; k < 5; ++k) {
        auto r = rotation_map(c5, k);
        CHECK(is_shy(r).shy);
        CHECK(degree_of_cycle_map(r) == 1);
    }
    auto refl = reflection_map(c5);
    CHECK(is_shy(refl).shy);
    CHECK(degree_of_cycle_map(refl) == -1);
    CHECK_THROWS_AS(standard_wrap(4, 5), PreconditionError);
    CHECK_THROWS_AS(rotation_map(make_path(4), 1), PreconditionError);
}
