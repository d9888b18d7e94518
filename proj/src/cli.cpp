#include "shylab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "shylab/constructions.hpp"
#include "shylab/digital_maps.hpp"
#include "shylab/errors.hpp"
#include "shylab/json_io.hpp"
#include "shylab/khalimsky.hpp"
#include "shylab/pl_real.hpp"
#include "shylab/suites.hpp"

namespace shylab {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string point_list(const DigitalImage& img, const std::vector<int>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ", ";
        s += point_to_string(img.point(idx[i]));
    }
    return s + "}";
}

std::optional<std::pair<int, int>> discontinuity_witness(const DigitalMap& f) {
    for (auto [a, b] : f.domain().edges()) {
        int fa = f.apply_index(a);
        int fb = f.apply_index(b);
        if (fa != fb && !f.codomain().adjacent_indices(fa, fb)) return std::make_pair(a, b);
    }
    return std::nullopt;
}

json shy_witness_json(const DigitalMap& f, const ShyVerdict& v) {
    json subset_points = json::array();
    for (int i : v.witness) subset_points.push_back(f.codomain().point(i).coords);
    json preimage_points = json::array();
    for (int i : v.witness_preimage) preimage_points.push_back(f.domain().point(i).coords);
    return json{{"subset_indices", v.witness},
                {"subset_points", subset_points},
                {"preimage_indices", v.witness_preimage},
                {"preimage_points", preimage_points}};
}

json check_report(const std::string& check, bool holds) {
    return json{{"schema", 1}, {"check", check}, {"holds", holds}};
}

int do_check_continuity(const std::string& file, bool as_json, std::ostream& out) {
    DigitalMap f = parse_map(load_json_file(file));
    auto bad_edge = discontinuity_witness(f);
    bool holds = !bad_edge.has_value();
    if (as_json) {
        json j = check_report("continuity", holds);
        if (bad_edge)
            j["witness"] = json{{"edge", json::array({bad_edge->first, bad_edge->second})}};
        emit(out, j);
    } else if (holds) {
        out << "continuous: adjacent points map to equal or adjacent points\n";
    } else {
        out << "not continuous: edge (" << point_to_string(f.domain().point(bad_edge->first))
            << ", " << point_to_string(f.domain().point(bad_edge->second))
            << ") maps to a non-adjacent pair\n";
    }
    return holds ? 0 : 1;
}

int do_check_shy(const std::string& file, bool oracle, bool as_json, std::ostream& out) {
    const std::string name = oracle ? "oracle-shy" : "shy";
    DigitalMap f = parse_map(load_json_file(file));
    if (auto bad_edge = discontinuity_witness(f)) {
        if (as_json) {
            json j = check_report(name, false);
            j["reason"] = "not continuous";
            j["witness"] = json{{"edge", json::array({bad_edge->first, bad_edge->second})}};
            emit(out, j);
        } else {
            out << "not shy: the map is not even continuous (edge ("
                << point_to_string(f.domain().point(bad_edge->first)) << ", "
                << point_to_string(f.domain().point(bad_edge->second)) << ") breaks)\n";
        }
        return 1;
    }
    ShyVerdict v = oracle ? shy_oracle(f) : is_shy(f);
    if (as_json) {
        json j = check_report(name, v.shy);
        if (!v.shy) j["witness"] = shy_witness_json(f, v);
        emit(out, j);
        return v.shy ? 0 : 1;
    }
    if (v.shy) {
        out << "shy: every connected subset of the image pulls back to a connected set\n";
        return 0;
    }
    out << "not shy: image subset " << point_list(f.codomain(), v.witness)
        << " has disconnected preimage " << point_list(f.domain(), v.witness_preimage) << "\n";
    return 1;
}

int do_check_monotone(const std::string& file, bool as_json, std::ostream& out) {
    PLFunction f = parse_pl(load_json_file(file));
    bool holds = is_monotone(f);
    if (as_json)
        emit(out, check_report("monotone", holds));
    else
        out << (holds ? "monotone\n" : "not monotone\n");
    return holds ? 0 : 1;
}

int do_check_shy_pl(const std::string& file, bool as_json, std::ostream& out) {
    PLFunction f = parse_pl(load_json_file(file));
    bool holds = f.circular() ? is_shy_circle_pl(f) : is_shy_pl(f);
    auto witness = f.circular() ? circle_pl_shy_witness(f) : pl_shy_witness(f);
    if (as_json) {
        json j = check_report("shy-pl", holds);
        j["circular"] = f.circular();
        if (witness) {
            json parts = json::array();
            for (const auto& p : witness->preimage.parts()) parts.push_back(interval_to_string(p));
            j["witness"] = json{{"level", interval_to_string(witness->level)}, {"preimage", parts}};
        }
        emit(out, j);
        return holds ? 0 : 1;
    }
    if (holds) {
        out << "shy: every value interval pulls back to one "
            << (f.circular() ? "arc\n" : "interval\n");
        return 0;
    }
    out << "not shy: level " << interval_to_string(witness->level) << " pulls back to "
        << interval_union_to_string(witness->preimage) << "\n";
    return 1;
}

void print_suite(const SuiteReport& rep, bool as_json, std::ostream& out) {
    if (as_json) {
        emit(out, rep.to_json());
        return;
    }
    out << "suite " << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.cases
        << " cases, " << rep.failures << " failures, seed " << rep.seed << ", " << rep.elapsed_ms
        << " ms)\n";
    for (const auto& n : rep.notes) out << "  note: " << n << "\n";
    if (rep.witness) out << "  witness: " << rep.witness->dump(2) << "\n";
}

int do_khalimsky_verify(long long window, int dim, bool as_json, std::ostream& out) {
    SuiteReport rep;
    if (dim == 1) {
        rep = verify_q_shy_window(window);
    } else {
        std::vector<KhalimskyInterval> box(static_cast<std::size_t>(dim),
                                           KhalimskyInterval(-window, window));
        rep = verify_qn_shy_boxes(box);
    }
    print_suite(rep, as_json, out);
    return rep.passed() ? 0 : 1;
}

int do_construct_wedge(const std::string& left_file, const std::string& right_file, int left_base,
                       int right_base, std::ostream& out) {
    DigitalImage left = parse_image(load_json_file(left_file));
    DigitalImage right = parse_image(load_json_file(right_file));
    if (left_base < 0 || left_base >= left.size() || right_base < 0 ||
        right_base >= right.size())
        throw ParseError("basepoint index out of range");
    WedgeImage w = wedge(left, left.point(left_base), right, right.point(right_base));
    json j = image_to_json(w.image());
    j["wedge_index"] = w.wedge_index();
    j["left_part"] = w.left_part();
    j["right_part"] = w.right_part();
    emit(out, j);
    return 0;
}

int do_construct_product(const std::vector<std::string>& files, std::ostream& out) {
    if (files.size() < 2) throw ParseError("product needs at least two inputs");
    std::vector<json> docs;
    docs.reserve(files.size());
    for (const auto& p : files) docs.push_back(load_json_file(p));
    bool maps = docs.front().contains("table");
    for (const auto& d : docs)
        if (d.contains("table") != maps)
            throw ParseError("mix of map and image inputs; product takes all of one kind");
    if (maps) {
        std::vector<DigitalMap> fs;
        fs.reserve(docs.size());
        for (const auto& d : docs) fs.push_back(parse_map(d));
        emit(out, map_to_json(product_map(fs)));
    } else {
        std::vector<DigitalImage> imgs;
        imgs.reserve(docs.size());
        for (const auto& d : docs) imgs.push_back(parse_image(d));
        emit(out, image_to_json(product_images(imgs)));
    }
    return 0;
}

int do_construct_compose(const std::string& first_file, const std::string& second_file,
                         std::ostream& out) {
    DigitalMap f = parse_map(load_json_file(first_file));
    DigitalMap g = parse_map(load_json_file(second_file));
    emit(out, map_to_json(compose(f, g)));
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decides continuity and shyness for maps between digital images and for "
                 "exact-rational piecewise-linear functions"};
    app.name("shylab");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON reports");
    int rc = 0;

    // check ------------------------------------------------------------
    auto* check = app.add_subcommand("check", "decide one property of one object");
    check->require_subcommand(1);
    check->fallthrough();

    std::string cont_file;
    auto* c_cont = check->add_subcommand("continuity", "adjacency preservation of a digital map");
    c_cont->fallthrough();
    c_cont->add_option("map", cont_file, "map JSON file")->required();
    c_cont->callback([&] { rc = do_check_continuity(cont_file, as_json, out); });

    std::string shy_file;
    auto* c_shy = check->add_subcommand("shy", "fiber-and-pair shyness decider");
    c_shy->fallthrough();
    c_shy->add_option("map", shy_file, "map JSON file")->required();
    c_shy->callback([&] { rc = do_check_shy(shy_file, false, as_json, out); });

    std::string orc_file;
    auto* c_orc = check->add_subcommand(
        "oracle-shy", "brute-force shyness over every connected subset of the image");
    c_orc->fallthrough();
    c_orc->add_option("map", orc_file, "map JSON file")->required();
    c_orc->callback([&] { rc = do_check_shy(orc_file, true, as_json, out); });

    std::string mono_file;
    auto* c_mono = check->add_subcommand("monotone", "monotonicity of an interval PL function");
    c_mono->fallthrough();
    c_mono->add_option("pl", mono_file, "PL function JSON file")->required();
    c_mono->callback([&] { rc = do_check_monotone(mono_file, as_json, out); });

    std::string shypl_file;
    auto* c_shypl =
        check->add_subcommand("shy-pl", "shyness of a PL function (circle domains wrap)");
    c_shypl->fallthrough();
    c_shypl->add_option("pl", shypl_file, "PL function JSON file")->required();
    c_shypl->callback([&] { rc = do_check_shy_pl(shypl_file, as_json, out); });

    // khalimsky ---------------------------------------------------------
    auto* kh = app.add_subcommand("khalimsky", "the real-to-Khalimsky quotient map");
    kh->require_subcommand(1);
    kh->fallthrough();

    std::string q_arg;
    auto* kh_q = kh->add_subcommand("q", "evaluate the quotient at a rational");
    kh_q->fallthrough();
    kh_q->add_option("x", q_arg, "rational in p/q form")->required();
    kh_q->callback([&] {
        Rat x = parse_rat(q_arg);
        long long z = q_value(x);
        if (as_json)
            emit(out, json{{"schema", 1}, {"check", "khalimsky-q"}, {"x", rat_to_string(x)},
                           {"value", z}});
        else
            out << "q(" << rat_to_string(x) << ") = " << z << "\n";
        rc = 0;
    });

    long long kh_window = 10;
    int kh_dim = 1;
    auto* kh_v = kh->add_subcommand(
        "verify", "sweep every interval (or box) in a window and check its preimage is one piece");
    kh_v->fallthrough();
    kh_v->add_option("--window", kh_window, "half-window: intervals within [-N, N]")
        ->check(CLI::NonNegativeNumber);
    kh_v->add_option("--dim", kh_dim, "coordinatewise quotient dimension")->check(CLI::Range(1, 3));
    kh_v->callback([&] { rc = do_khalimsky_verify(kh_window, kh_dim, as_json, out); });

    // construct -----------------------------------------------------------
    auto* make = app.add_subcommand("construct", "build derived objects and print their JSON");
    make->require_subcommand(1);
    make->fallthrough();

    std::string w_left, w_right;
    int w_lbase = 0, w_rbase = 0;
    auto* mk_wedge = make->add_subcommand("wedge", "glue two images at a basepoint");
    mk_wedge->fallthrough();
    mk_wedge->add_option("left", w_left, "left image JSON file")->required();
    mk_wedge->add_option("right", w_right, "right image JSON file")->required();
    mk_wedge->add_option("--left-base", w_lbase, "left basepoint index (default 0)");
    mk_wedge->add_option("--right-base", w_rbase, "right basepoint index (default 0)");
    mk_wedge->callback([&] { rc = do_construct_wedge(w_left, w_right, w_lbase, w_rbase, out); });

    std::vector<std::string> p_files;
    auto* mk_prod = make->add_subcommand("product", "strong product of images, or of maps");
    mk_prod->fallthrough();
    mk_prod->add_option("inputs", p_files, "two or more image (or map) JSON files")->required();
    mk_prod->callback([&] { rc = do_construct_product(p_files, out); });

    std::string comp_first, comp_second;
    auto* mk_comp = make->add_subcommand("compose", "apply the first map, then the second");
    mk_comp->fallthrough();
    mk_comp->add_option("first", comp_first, "map JSON file")->required();
    mk_comp->add_option("second", comp_second, "map JSON file")->required();
    mk_comp->callback([&] { rc = do_construct_compose(comp_first, comp_second, out); });

    // suite --------------------------------------------------------------
    std::string suite_name;
    std::uint64_t seed = 0;
    SuiteLimits lim;
    auto* suite = app.add_subcommand("suite", "run one named verification suite");
    suite->fallthrough();
    suite->add_option("name", suite_name, "suite name")->required();
    suite->add_option("--seed", seed, "random seed (default 0)");
    suite->add_option("--cases", lim.cases, "randomized case count")->check(CLI::PositiveNumber);
    suite->add_option("--max-size", lim.max_size, "largest random image")->check(CLI::Range(1, 15));
    suite->add_option("--window", lim.window, "half-window for khalimsky-q")
        ->check(CLI::NonNegativeNumber);
    suite->add_option("--max-cycle", lim.max_cycle, "largest cycle for pi1-degree")
        ->check(CLI::Range(4, 12));
    suite->add_flag("--exhaustive", lim.exhaustive, "run the full enumeration where one exists");
    suite->callback([&] {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), suite_name) == names.end()) {
            err << "unknown suite '" << suite_name << "'; valid names:";
            for (const auto& n : names) err << " " << n;
            err << "\n";
            rc = 2;
            return;
        }
        SuiteReport rep = run_suite(suite_name, seed, lim);
        print_suite(rep, as_json, out);
        rc = rep.passed() ? 0 : 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace shylab
