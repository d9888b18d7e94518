#include "shylab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "shylab/constructions.hpp"
#include "shylab/digital_maps.hpp"
#include "shylab/errors.hpp"
#include "shylab/generators.hpp"
#include "shylab/json_io.hpp"
#include "shylab/khalimsky.hpp"
#include "shylab/pl_real.hpp"
#include "shylab/shapes.hpp"

namespace shylab {

namespace {

using nlohmann::json;

// One verification instance: count it, and keep the first counterexample as
// the report's witness. The witness is built lazily so passing runs pay
// nothing for it.
void tally(SuiteReport& rep, bool ok, const std::function<json()>& witness) {
    ++rep.cases;
    if (ok) return;
    ++rep.failures;
    if (!rep.witness) rep.witness = witness();
}

json union_to_json(const IntervalUnion& u) {
    json parts = json::array();
    for (const auto& p : u.parts()) parts.push_back(interval_to_string(p));
    return parts;
}

// ---- oracle-equivalence ----------------------------------------------------
//
// The two continuity definitions and the two shyness deciders must agree:
// exhaustively on three small map spaces, then on seeded random continuous
// maps.

SuiteReport suite_oracle_equivalence(std::uint64_t seed, const SuiteLimits& lim) {
    SuiteReport rep;
    auto bed = [&](const DigitalImage& dom, const DigitalImage& cod) {
        for_each_map(dom, cod, [&](const DigitalMap& f) {
            bool c_edge = is_continuous(f);
            bool c_conn = is_continuous_oracle(f);
            bool ok = c_edge == c_conn;
            bool s_fib = false, s_brute = false;
            if (ok && c_edge) {
                s_fib = is_shy(f).shy;
                s_brute = shy_oracle(f).shy;
                ok = s_fib == s_brute;
            }
            tally(rep, ok, [&] {
                return json{{"map", map_to_json(f)},
                            {"is_continuous", c_edge},
                            {"is_continuous_oracle", c_conn},
                            {"is_shy", s_fib},
                            {"shy_oracle", s_brute}};
            });
        });
    };
    bed(make_path(3), make_path(3));
    bed(make_cycle(4), make_cycle(4));
    bed(make_cycle(4), make_path(3));

    RandomSource rs(seed);
    for (long long i = 0; i < lim.cases; ++i) {
        auto dom = random_image(rs, lim.max_size);
        auto cod = random_image(rs, std::min(lim.max_size, 6));
        auto f = random_continuous_map(rs, dom, cod);
        bool s_fib = is_shy(f).shy;
        bool s_brute = shy_oracle(f).shy;
        tally(rep, s_fib == s_brute, [&] {
            return json{{"map", map_to_json(f)}, {"is_shy", s_fib}, {"shy_oracle", s_brute}};
        });
    }
    return rep;
}

// ---- monotone-shy ----------------------------------------------------------
//
// Interval-domain PL functions are shy exactly when monotone. The tent map
// is pinned as the canonical failure, with its split level as witness.

SuiteReport suite_monotone_shy(std::uint64_t seed, const SuiteLimits& lim) {
    SuiteReport rep;
    PLFunction tent({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(0)}}, false);
    auto tw = pl_shy_witness(tent);
    tally(rep, !is_shy_pl(tent) && tw.has_value() && tw->preimage.size() >= 2, [&] {
        return json{{"pl", pl_to_json(tent)}, {"is_shy_pl", is_shy_pl(tent)}};
    });

    RandomSource rs(seed);
    for (long long i = 0; i < lim.cases; ++i) {
        auto f = random_pl_function(rs, 8, false);
        bool shy = is_shy_pl(f);
        bool mono = is_monotone(f);
        tally(rep, shy == mono, [&] {
            json w{{"pl", pl_to_json(f)}, {"is_shy_pl", shy}, {"is_monotone", mono}};
            if (auto pw = pl_shy_witness(f)) {
                w["level"] = interval_to_string(pw->level);
                w["preimage"] = union_to_json(pw->preimage);
            }
            return w;
        });
    }
    return rep;
}

// ---- circle-constant -------------------------------------------------------
//
// Circle-domain PL functions are shy exactly when constant. A one-bump loop
// is pinned as the canonical failure.

SuiteReport suite_circle_constant(std::uint64_t seed, const SuiteLimits& lim) {
    SuiteReport rep;
    PLFunction bump({{Rat(0), Rat(0)}, {Rat(1, 4), Rat(1)}, {Rat(3, 4), Rat(-1)}, {Rat(1), Rat(0)}},
                    true);
    tally(rep, !is_shy_circle_pl(bump) && circle_pl_shy_witness(bump).has_value(),
          [&] { return json{{"pl", pl_to_json(bump)}}; });
    PLFunction flat({{Rat(0), Rat(2)}, {Rat(1), Rat(2)}}, true);
    tally(rep, is_shy_circle_pl(flat), [&] { return json{{"pl", pl_to_json(flat)}}; });

    RandomSource rs(seed);
    for (long long i = 0; i < lim.cases; ++i) {
        auto f = random_pl_function(rs, 8, true);
        bool shy = is_shy_circle_pl(f);
        bool constant = f.min_value() == f.max_value();
        tally(rep, shy == constant, [&] {
            json w{{"pl", pl_to_json(f)}, {"is_shy_circle_pl", shy}, {"constant", constant}};
            if (auto cw = circle_pl_shy_witness(f)) {
                w["level"] = interval_to_string(cw->level);
                w["preimage"] = union_to_json(cw->preimage);
            }
            return w;
        });
    }
    return rep;
}

// ---- khalimsky-q -----------------------------------------------------------
//
// The real-to-Khalimsky quotient pulls every connected integer interval in
// [-window, window] back to one interval; with --exhaustive the planar
// coordinatewise sweep over [-10, 10]^2 boxes runs as well.

SuiteReport suite_khalimsky_q(const SuiteLimits& lim) {
    SuiteReport rep = verify_q_shy_window(lim.window);
    if (lim.exhaustive) {
        long long r = std::min<long long>(lim.window, 10);
        SuiteReport boxes = verify_qn_shy_boxes({KhalimskyInterval(-r, r), KhalimskyInterval(-r, r)});
        rep.cases += boxes.cases;
        rep.failures += boxes.failures;
        if (!rep.witness) rep.witness = boxes.witness;
        rep.notes.insert(rep.notes.end(), boxes.notes.begin(), boxes.notes.end());
        rep.notes.push_back("planar boxes swept at radius " + std::to_string(r));
    }
    return rep;
}

// ---- composition -----------------------------------------------------------
//
// A shy surjection followed by a shy map is shy. The pairs are built to
// satisfy the hypothesis by construction, and the hypothesis is re-checked
// so a generator bug cannot silently weaken the suite.

SuiteReport suite_composition(std::uint64_t seed, const SuiteLimits& lim) {
    SuiteReport rep;
    RandomSource rs(seed);
    for (long long i = 0; i < lim.cases; ++i) {
        auto mid = random_image(rs, std::min(lim.max_size, 6));
        auto f = random_shy_surjection_onto(rs, mid, 2);
        auto g = random_quotient_map(rs, mid, 2);
        auto h = compose(f, g);
        bool hypothesis = is_shy(f).shy && is_surjective(f) && is_shy(g).shy;
        bool conclusion = is_shy(h).shy && shy_oracle(h).shy;
        tally(rep, hypothesis && conclusion, [&] {
            return json{{"f", map_to_json(f)},
                        {"g", map_to_json(g)},
                        {"composed", map_to_json(h)},
                        {"hypothesis", hypothesis},
                        {"conclusion", conclusion}};
        });
    }
    return rep;
}

// ---- factor ----------------------------------------------------------------
//
// A shy product map has shy factors. The converse is NOT asserted: pairs of
// shy factors whose product fails the oracle are only logged as notes.

SuiteReport suite_factor(std::uint64_t seed, const SuiteLimits& lim) {
    SuiteReport rep;
    RandomSource rs(seed);
    long long converse_candidates = 0;
    for (long long i = 0; i < lim.cases; ++i) {
        auto f1 = random_continuous_map(rs, random_image(rs, 3), random_image(rs, 3));
        auto f2 = random_continuous_map(rs, random_image(rs, 3), random_image(rs, 3));
        auto p = product_map({f1, f2});
        bool p_shy = shy_oracle(p).shy;
        bool f1_shy = shy_oracle(f1).shy;
        bool f2_shy = shy_oracle(f2).shy;
        if (f1_shy && f2_shy && !p_shy) ++converse_candidates;
        tally(rep, !p_shy || (f1_shy && f2_shy), [&] {
            return json{{"f1", map_to_json(f1)},
                        {"f2", map_to_json(f2)},
                        {"product", map_to_json(p)},
                        {"product_shy", p_shy},
                        {"factors_shy", json::array({f1_shy, f2_shy})}};
        });
    }
    rep.notes.push_back("converse candidates (factors shy, product not): " +
                        std::to_string(converse_candidates));
    return rep;
}

// ---- wedge -----------------------------------------------------------------
//
// Two parts: the separation lemma (a connected subset of a wedge missing
// the basepoint stays in one part), exhausted over all wedges of a small
// pointed family; and the glued-map law f v g shy <=> f shy and g shy on
// random pointed continuous maps.

std::vector<std::pair<DigitalImage, int>> small_pointed_family() {
    std::vector<std::pair<DigitalImage, int>> fam;
    for (int n = 1; n <= 4; ++n) {
        auto p = make_path(n);
        for (int b = 0; b < n; ++b) fam.emplace_back(p, b);
    }
    for (int n : {3, 4}) {
        auto c = make_cycle(n);
        for (int b = 0; b < n; ++b) fam.emplace_back(c, b);
    }
    auto s = make_star(3, 1);
    for (int b = 0; b < s.size(); ++b) fam.emplace_back(s, b);
    return fam;
}

SuiteReport suite_wedge(std::uint64_t seed, const SuiteLimits& lim) {
    SuiteReport rep;
    auto fam = small_pointed_family();
    for (const auto& [left, lb] : fam) {
        for (const auto& [right, rb] : fam) {
            WedgeImage w = wedge(left, left.point(lb), right, right.point(rb));
            auto lp = w.left_part();
            auto rp = w.right_part();
            bool ok = true;
            for_each_connected_subset(
                w.image(), all_indices(w.image()), std::nullopt, [&](const std::vector<int>& s) {
                    if (std::find(s.begin(), s.end(), w.wedge_index()) != s.end()) return true;
                    bool in_left = std::includes(lp.begin(), lp.end(), s.begin(), s.end());
                    bool in_right = std::includes(rp.begin(), rp.end(), s.begin(), s.end());
                    if (!in_left && !in_right) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
            tally(rep, ok, [&] {
                return json{{"wedge", image_to_json(w.image())},
                            {"wedge_index", w.wedge_index()},
                            {"lemma", "basepoint separates"}};
            });
        }
    }

    RandomSource rs(seed);
    for (long long i = 0; i < lim.cases; ++i) {
        auto dl = random_connected_image(rs, 4);
        auto dr = random_connected_image(rs, 4);
        auto cl = random_connected_image(rs, 4);
        auto cr = random_connected_image(rs, 4);
        int dlb = static_cast<int>(rs.uniform(0, dl.size() - 1));
        int drb = static_cast<int>(rs.uniform(0, dr.size() - 1));
        int clb = static_cast<int>(rs.uniform(0, cl.size() - 1));
        int crb = static_cast<int>(rs.uniform(0, cr.size() - 1));
        WedgeImage w_in = wedge(dl, dl.point(dlb), dr, dr.point(drb));
        WedgeImage w_out = wedge(cl, cl.point(clb), cr, cr.point(crb));
        auto f = random_pointed_continuous_map(rs, w_in.left_image(), w_out.left_image(),
                                               w_in.left_base_index(), w_out.left_base_index());
        auto g = random_pointed_continuous_map(rs, w_in.right_image(), w_out.right_image(),
                                               w_in.right_base_index(), w_out.right_base_index());
        auto h = vee_map(f, g, w_in, w_out);
        bool h_shy = shy_oracle(h).shy;
        bool parts_shy = shy_oracle(f).shy && shy_oracle(g).shy;
        tally(rep, h_shy == parts_shy && is_shy(h).shy == h_shy, [&] {
            return json{{"f", map_to_json(f)},
                        {"g", map_to_json(g)},
                        {"glued", map_to_json(h)},
                        {"glued_shy", h_shy},
                        {"parts_shy", parts_shy}};
        });
    }
    return rep;
}

// ---- cut-point -------------------------------------------------------------
//
// A shy map from a connected image into a digital interval is constant on
// all but at most two of the components left by deleting a point: values on
// distinct branches would otherwise pin three runs through f(r). Exhausted
// over every continuous map from a 3-star into a digital interval.

SuiteReport suite_cut_point(const SuiteLimits& lim) {
    SuiteReport rep;
    int len = lim.exhaustive ? 2 : 1;
    int rad = lim.exhaustive ? 3 : 2;
    auto dom = make_star(3, len);
    auto cod = make_interval(-rad, rad);
    LatticePoint center = dom.point(0);
    long long continuous = 0, shy = 0;
    for_each_continuous_map(dom, cod, [&](const DigitalMap& f) {
        ++continuous;
        if (!is_shy(f).shy) return;
        ++shy;
        int branches = cut_point_audit(f, center);
        tally(rep, branches <= 2, [&] {
            return json{{"map", map_to_json(f)}, {"nonconstant_branches", branches}};
        });
    });
    rep.notes.push_back("3-star rays of " + std::to_string(len) + " into [-" + std::to_string(rad) +
                        ", " + std::to_string(rad) + "]: " + std::to_string(continuous) +
                        " continuous maps, " + std::to_string(shy) + " shy");
    return rep;
}

// ---- pi1-degree ------------------------------------------------------------
//
// Between cycles, shy surjections have winding number +-1 (the induced
// degree map on loops is onto), and every standard wrap composed with
// rotations and reflections is shy of degree +-1. Exhaustive mode sweeps
// all continuous maps C_m -> C_n for 4 <= n, m <= max_cycle.

SuiteReport suite_pi1_degree(std::uint64_t seed, const SuiteLimits& lim) {
    SuiteReport rep;
    int top = std::max(4, lim.max_cycle);
    for (int n = 4; n <= top; ++n) {
        auto cod = make_cycle(n);
        for (int m = n; m <= top; ++m) {
            for (int k = 0; k < n; ++k) {
                for (bool reflect : {false, true}) {
                    DigitalMap t = compose(standard_wrap(m, n), rotation_map(cod, k));
                    if (reflect) t = compose(t, reflection_map(cod));
                    bool shy_both = is_shy(t).shy && shy_oracle(t).shy;
                    int deg = degree_of_cycle_map(t);
                    tally(rep, shy_both && std::abs(deg) == 1 && pi1_surjectivity_cycle(t), [&] {
                        return json{{"map", map_to_json(t)},
                                    {"shy", shy_both},
                                    {"degree", deg},
                                    {"standard", true}};
                    });
                }
            }
        }
    }

    auto check_shy_surjection = [&](const DigitalMap& f) {
        if (!is_surjective(f) || !is_shy(f).shy) return;
        int deg = degree_of_cycle_map(f);
        tally(rep, std::abs(deg) == 1 && pi1_surjectivity_cycle(f),
              [&] { return json{{"map", map_to_json(f)}, {"degree", deg}}; });
    };
    if (lim.exhaustive) {
        for (int m = 4; m <= top; ++m) {
            for (int n = 4; n <= top; ++n) {
                auto dom = make_cycle(m);
                auto cod = make_cycle(n);
                long long continuous = 0, shy_surj = 0;
                long long before = rep.cases;
                for_each_continuous_map(dom, cod, [&](const DigitalMap& f) {
                    ++continuous;
                    check_shy_surjection(f);
                });
                shy_surj = rep.cases - before;
                rep.notes.push_back("C" + std::to_string(m) + " -> C" + std::to_string(n) + ": " +
                                    std::to_string(continuous) + " continuous, " +
                                    std::to_string(shy_surj) + " shy surjections");
            }
        }
    } else {
        RandomSource rs(seed);
        for (long long i = 0; i < lim.cases; ++i) {
            int m = static_cast<int>(rs.uniform(4, top));
            int n = static_cast<int>(rs.uniform(4, top));
            auto f = random_continuous_map(rs, make_cycle(m), make_cycle(n));
            ++rep.cases;
            if (!is_surjective(f) || !is_shy(f).shy) continue;
            int deg = degree_of_cycle_map(f);
            bool ok = std::abs(deg) == 1 && pi1_surjectivity_cycle(f);
            if (!ok) {
                ++rep.failures;
                if (!rep.witness) rep.witness = json{{"map", map_to_json(f)}, {"degree", deg}};
            }
        }
    }
    return rep;
}

// ---- embedding-example -----------------------------------------------------
//
// The half-turn arc embedding of [0, 1/2] into the circle: shy, and the
// closed lower arc pulls back to exactly the two endpoints. A five-point
// digital arc inside C8 mirrors it.

SuiteReport suite_embedding_example(const SuiteLimits&) {
    SuiteReport rep;
    AngleMap half(PLFunction({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}}, false));
    tally(rep, is_shy_interval_to_circle(half),
          [&] { return json{{"angle_map", angle_map_to_json(half)}}; });

    Arc lower(Rat(1, 2), Rat(1), true, true);
    IntervalUnion pre = arc_preimage(half, lower);
    std::vector<RationalInterval> expected{RationalInterval::point(Rat(0)),
                                           RationalInterval::point(Rat(1, 2))};
    tally(rep, pre.parts() == expected, [&] {
        return json{{"angle_map", angle_map_to_json(half)},
                    {"arc", "[1/2, 1]"},
                    {"preimage", union_to_json(pre)}};
    });

    Arc upper(Rat(0), Rat(1, 2), true, true);
    IntervalUnion pre_upper = arc_preimage(half, upper);
    std::vector<RationalInterval> whole{RationalInterval::closed(Rat(0), Rat(1, 2))};
    tally(rep, pre_upper.parts() == whole, [&] {
        return json{{"angle_map", angle_map_to_json(half)},
                    {"arc", "[0, 1/2]"},
                    {"preimage", union_to_json(pre_upper)}};
    });

    Arc open_upper(Rat(0), Rat(1, 2), false, false);
    IntervalUnion pre_open = arc_preimage(half, open_upper);
    std::vector<RationalInterval> interior{RationalInterval::open(Rat(0), Rat(1, 2))};
    tally(rep, pre_open.parts() == interior, [&] {
        return json{{"angle_map", angle_map_to_json(half)},
                    {"arc", "(0, 1/2)"},
                    {"preimage", union_to_json(pre_open)}};
    });

    auto arc5 = make_path(5);
    auto c8 = make_cycle(8);
    DigitalMap incl(arc5, c8, {0, 1, 2, 3, 4});
    tally(rep, is_continuous(incl) && is_shy(incl).shy && shy_oracle(incl).shy,
          [&] { return json{{"map", map_to_json(incl)}}; });
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "oracle-equivalence", "monotone-shy", "circle-constant", "khalimsky-q", "composition",
        "factor",             "wedge",        "cut-point",       "pi1-degree",  "embedding-example"};
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, const SuiteLimits& limits) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    if (name == "oracle-equivalence")
        rep = suite_oracle_equivalence(seed, limits);
    else if (name == "monotone-shy")
        rep = suite_monotone_shy(seed, limits);
    else if (name == "circle-constant")
        rep = suite_circle_constant(seed, limits);
    else if (name == "khalimsky-q")
        rep = suite_khalimsky_q(limits);
    else if (name == "composition")
        rep = suite_composition(seed, limits);
    else if (name == "factor")
        rep = suite_factor(seed, limits);
    else if (name == "wedge")
        rep = suite_wedge(seed, limits);
    else if (name == "cut-point")
        rep = suite_cut_point(limits);
    else if (name == "pi1-degree")
        rep = suite_pi1_degree(seed, limits);
    else if (name == "embedding-example")
        rep = suite_embedding_example(limits);
    else
        throw DomainError("unknown suite: " + name);
    rep.suite = name;
    rep.seed = seed;
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace shylab
