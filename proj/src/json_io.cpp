#include "shylab/json_io.hpp"

#include <cctype>
#include <string>

#include "shylab/errors.hpp"

namespace shylab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    if (!j.is_object()) bad("expected an object with a '" + std::string(name) + "' field");
    auto it = j.find(name);
    if (it == j.end()) bad("missing field '" + std::string(name) + "'");
    return *it;
}

int int_from_json(const nlohmann::json& v, const char* what) {
    if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
    return v.get<int>();
}

}  // namespace

Rat rat_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) return parse_rat(v.get<std::string>());
    bad("a rational must be an integer or a 'p/q' string");
}

nlohmann::json rat_to_json(const Rat& x) { return rat_to_string(x); }

DigitalImage parse_image(const nlohmann::json& j) {
    int dim = int_from_json(field(j, "dim"), "'dim'");

    const auto& jpoints = field(j, "points");
    if (!jpoints.is_array()) bad("'points' must be an array");
    std::vector<LatticePoint> points;
    for (const auto& jp : jpoints) {
        if (!jp.is_array() || static_cast<int>(jp.size()) != dim)
            bad("each point must be an array of 'dim' integers");
        std::vector<int> coords;
        for (const auto& c : jp) coords.push_back(int_from_json(c, "a coordinate"));
        points.emplace_back(std::move(coords));
    }

    const auto& jadj = field(j, "adjacency");
    AdjacencySpec spec = CuAdjacency{1};
    if (jadj.is_string()) {
        std::string s = jadj.get<std::string>();
        if (s.size() < 2 || s[0] != 'c') bad("adjacency must be 'c<u>' or an edge object");
        int u = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i])))
                bad("adjacency must be 'c<u>' or an edge object");
            u = u * 10 + (s[i] - '0');
        }
        if (u < 1) bad("c_u adjacency needs u >= 1");
        spec = CuAdjacency{u};
    } else if (jadj.is_object()) {
        const auto& jedges = field(jadj, "edges");
        if (!jedges.is_array()) bad("'edges' must be an array of index pairs");
        ExplicitEdges ee;
        for (const auto& je : jedges) {
            if (!je.is_array() || je.size() != 2) bad("an edge must be a pair of point indices");
            ee.edges.emplace_back(int_from_json(je[0], "an edge endpoint"),
                                  int_from_json(je[1], "an edge endpoint"));
        }
        spec = std::move(ee);
    } else {
        bad("adjacency must be 'c<u>' or an edge object");
    }

    try {
        return {std::move(points), std::move(spec)};
    } catch (const DomainError& e) {
        bad(std::string("invalid image: ") + e.what());
    }
}

nlohmann::json image_to_json(const DigitalImage& img) {
    nlohmann::json jpoints = nlohmann::json::array();
    for (const auto& p : img.points()) jpoints.push_back(p.coords);
    nlohmann::json jadj;
    if (const auto* cu = std::get_if<CuAdjacency>(&img.adjacency_spec())) {
        jadj = "c" + std::to_string(cu->u);
    } else {
        nlohmann::json jedges = nlohmann::json::array();
        for (const auto& [a, b] : img.edges()) jedges.push_back({a, b});
        jadj = {{"edges", jedges}};
    }
    return {{"dim", img.dim()}, {"points", jpoints}, {"adjacency", jadj}};
}

DigitalMap parse_map(const nlohmann::json& j) {
    DigitalImage domain = parse_image(field(j, "domain"));
    DigitalImage codomain = parse_image(field(j, "codomain"));
    const auto& jtable = field(j, "table");
    if (!jtable.is_array()) bad("'table' must be an array of codomain point indices");
    std::vector<int> table;
    for (const auto& v : jtable) table.push_back(int_from_json(v, "a table entry"));
    try {
        return {std::move(domain), std::move(codomain), std::move(table)};
    } catch (const DomainError& e) {
        bad(std::string("invalid map: ") + e.what());
    }
}

nlohmann::json map_to_json(const DigitalMap& f) {
    return {{"domain", image_to_json(f.domain())},
            {"codomain", image_to_json(f.codomain())},
            {"table", f.table()}};
}

PLFunction parse_pl(const nlohmann::json& j) {
    const auto& jcirc = field(j, "circular");
    if (!jcirc.is_boolean()) bad("'circular' must be a boolean");
    const auto& jbps = field(j, "breakpoints");
    if (!jbps.is_array()) bad("'breakpoints' must be an array of [x, y] pairs");
    std::vector<PLBreakpoint> bps;
    for (const auto& jbp : jbps) {
        if (!jbp.is_array() || jbp.size() != 2) bad("a breakpoint must be an [x, y] pair");
        bps.push_back({rat_from_json(jbp[0]), rat_from_json(jbp[1])});
    }
    try {
        return {std::move(bps), jcirc.get<bool>()};
    } catch (const ShapeError& e) {
        bad(std::string("invalid PL function: ") + e.what());
    }
}

nlohmann::json pl_to_json(const PLFunction& f) {
    nlohmann::json jbps = nlohmann::json::array();
    for (const auto& bp : f.breakpoints()) jbps.push_back({rat_to_json(bp.x), rat_to_json(bp.y)});
    return {{"circular", f.circular()}, {"breakpoints", jbps}};
}

AngleMap parse_angle_map(const nlohmann::json& j) {
    const auto& junits = field(j, "units");
    if (!junits.is_string() || junits.get<std::string>() != "turns")
        bad("angle maps must declare \"units\": \"turns\"");
    try {
        return AngleMap{parse_pl(j)};
    } catch (const ShapeError& e) {
        bad(std::string("invalid angle map: ") + e.what());
    }
}

nlohmann::json angle_map_to_json(const AngleMap& m) {
    nlohmann::json j = pl_to_json(m.pl());
    j["units"] = "turns";
    return j;
}

}  // namespace shylab
