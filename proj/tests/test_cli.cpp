#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "shylab/cli.hpp"

using namespace shylab;
using nlohmann::json;

namespace {

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = cli_main(args, out, err);
    return {rc, out.str(), err.str()};
}

std::string fixture(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << text;
    return path.string();
}

const char* kIdentityC4 = R"({
  "domain": {"dim": 1, "points": [[0],[1],[2],[3]],
             "adjacency": {"edges": [[0,1],[1,2],[2,3],[3,0]]}},
  "codomain": {"dim": 1, "points": [[0],[1],[2],[3]],
               "adjacency": {"edges": [[0,1],[1,2],[2,3],[3,0]]}},
  "table": [0,1,2,3]
})";

const char* kDegreeTwoWrap = R"({
  "domain": {"dim": 1, "points": [[0],[1],[2],[3],[4],[5],[6],[7]],
             "adjacency": {"edges": [[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,0]]}},
  "codomain": {"dim": 1, "points": [[0],[1],[2],[3]],
               "adjacency": {"edges": [[0,1],[1,2],[2,3],[3,0]]}},
  "table": [0,1,2,3,0,1,2,3]
})";

const char* kJump = R"({
  "domain": {"dim": 1, "points": [[0],[1],[2]], "adjacency": "c1"},
  "codomain": {"dim": 1, "points": [[0],[1],[2],[3],[4]], "adjacency": "c1"},
  "table": [0,4,1]
})";

const char* kTent = R"({"circular": false, "breakpoints": [[0,0],[1,1],[2,0]]})";
const char* kRamp = R"({"circular": false, "breakpoints": [[0,0],["1/2","1/3"],[2,2]]})";
const char* kLoop = R"({"circular": true, "breakpoints": [[0,0],["1/4",1],["3/4",-1],[1,0]]})";

}  // namespace

TEST_CASE("check exit codes: 0 holds, 1 fails, 2 bad input") {
    auto id = fixture("cli_id.json", kIdentityC4);
    auto wrap = fixture("cli_wrap.json", kDegreeTwoWrap);

    CHECK(run({"check", "shy", id}).rc == 0);
    CHECK(run({"check", "oracle-shy", id}).rc == 0);
    CHECK(run({"check", "continuity", id}).rc == 0);

    auto r = run({"check", "shy", wrap});
    CHECK(r.rc == 1);
    CHECK(r.out.find("not shy") != std::string::npos);
    CHECK(run({"check", "oracle-shy", wrap}).rc == 1);

    CHECK(run({"check", "shy", "/definitely/not/here.json"}).rc == 2);
    auto garbage = fixture("cli_garbage.json", "{ not json");
    CHECK(run({"check", "shy", garbage}).rc == 2);
    auto schema = fixture("cli_schema.json", R"({"domain": 3})");
    CHECK(run({"check", "shy", schema}).rc == 2);
}

TEST_CASE("a discontinuous map is reported not shy, not as an input error") {
    auto jump = fixture("cli_jump.json", kJump);
    CHECK(run({"check", "continuity", jump}).rc == 1);
    auto r = run({"check", "shy", jump});
    CHECK(r.rc == 1);
    CHECK(r.out.find("not even continuous") != std::string::npos);
    auto j = run({"--json", "check", "shy", jump});
    CHECK(j.rc == 1);
    auto doc = json::parse(j.out);
    CHECK(doc.at("holds") == false);
    CHECK(doc.at("reason") == "not continuous");
}

TEST_CASE("json check reports carry schema, verdict and a replayable witness") {
    auto wrap = fixture("cli_wrap.json", kDegreeTwoWrap);
    auto r = run({"--json", "check", "shy", wrap});
    CHECK(r.rc == 1);
    auto doc = json::parse(r.out);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("check") == "shy");
    CHECK(doc.at("holds") == false);
    REQUIRE(doc.contains("witness"));
    // The witness names a fiber with a split preimage: both deciders agree.
    CHECK(doc["witness"]["preimage_indices"].size() >= 2);
    auto o = json::parse(run({"--json", "check", "oracle-shy", wrap}).out);
    CHECK(o.at("holds") == false);
}

TEST_CASE("pl checks: monotone and shy-pl agree on the fixtures") {
    auto tent = fixture("cli_tent.json", kTent);
    auto ramp = fixture("cli_ramp.json", kRamp);
    auto loop = fixture("cli_loop.json", kLoop);

    CHECK(run({"check", "monotone", tent}).rc == 1);
    CHECK(run({"check", "monotone", ramp}).rc == 0);
    auto t = run({"check", "shy-pl", tent});
    CHECK(t.rc == 1);
    CHECK(t.out.find("level") != std::string::npos);
    CHECK(run({"check", "shy-pl", ramp}).rc == 0);
    CHECK(run({"check", "shy-pl", loop}).rc == 1);
    // Monotonicity is an interval-domain notion; a loop is an input error.
    CHECK(run({"check", "monotone", loop}).rc == 2);
}

TEST_CASE("khalimsky subcommands evaluate and verify") {
    auto q = run({"khalimsky", "q", "7/3"});
    CHECK(q.rc == 0);
    CHECK(q.out == "q(7/3) = 3\n");
    CHECK(run({"khalimsky", "q", "-2"}).out == "q(-2) = -2\n");
    CHECK(run({"khalimsky", "q", "1/0"}).rc == 2);

    auto v = json::parse(run({"--json", "khalimsky", "verify", "--window", "10"}).out);
    CHECK(v.at("cases") == 231);
    CHECK(v.at("failures") == 0);
    CHECK(run({"khalimsky", "verify", "--window", "3", "--dim", "2"}).rc == 0);
    // An axis of length 100 is over the supported box size.
    CHECK(run({"khalimsky", "verify", "--window", "50", "--dim", "2"}).rc == 2);
    CHECK(run({"khalimsky", "verify", "--dim", "7"}).rc == 2);
}

TEST_CASE("construct emits json that feeds back into check") {
    auto p3 = fixture("cli_p3.json", R"({"dim":1, "points":[[0],[1],[2]], "adjacency":"c1"})");
    auto w = run({"construct", "wedge", p3, p3, "--right-base", "2"});
    CHECK(w.rc == 0);
    auto wj = json::parse(w.out);
    CHECK(wj.at("points").size() == 5);
    CHECK(wj.at("wedge_index") == 0);

    // The wedge output is itself a valid image document.
    auto wfile = fixture("cli_wedge_out.json", w.out);
    auto prod = run({"construct", "product", wfile, p3});
    CHECK(prod.rc == 0);
    CHECK(json::parse(prod.out).at("points").size() == 15);

    auto id = fixture("cli_id.json", kIdentityC4);
    auto wrap = fixture("cli_wrap.json", kDegreeTwoWrap);
    auto comp = run({"construct", "compose", wrap, id});
    CHECK(comp.rc == 0);
    auto cfile = fixture("cli_comp_out.json", comp.out);
    CHECK(run({"check", "continuity", cfile}).rc == 0);
    CHECK(run({"check", "shy", cfile}).rc == 1);

    auto prod_maps = run({"construct", "product", id, id});
    CHECK(prod_maps.rc == 0);
    auto pfile = fixture("cli_prod_out.json", prod_maps.out);
    CHECK(run({"check", "shy", pfile}).rc == 0);

    CHECK(run({"construct", "compose", id, wrap}).rc == 2);  // shape mismatch
    CHECK(run({"construct", "product", id, p3}).rc == 2);    // map next to image
    CHECK(run({"construct", "wedge", p3, p3, "--left-base", "9"}).rc == 2);
}

TEST_CASE("suite command: pass/fail/unknown and reproducible reports") {
    auto ok = run({"suite", "embedding-example"});
    CHECK(ok.rc == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    auto bad = run({"suite", "no-such"});
    CHECK(bad.rc == 2);
    CHECK(bad.err.find("valid names") != std::string::npos);
    CHECK(bad.err.find("pi1-degree") != std::string::npos);

    auto a = run({"--json", "suite", "wedge", "--cases", "25", "--seed", "9"});
    auto b = run({"--json", "suite", "wedge", "--cases", "25", "--seed", "9"});
    REQUIRE(a.rc == 0);
    auto ja = json::parse(a.out);
    auto jb = json::parse(b.out);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja.dump() == jb.dump());
    CHECK(ja.at("schema") == 1);
    CHECK(ja.at("seed") == 9);
    CHECK(ja.at("cases") == 21 * 21 + 25);

    auto o = json::parse(run({"--json", "suite", "oracle-equivalence", "--cases", "10"}).out);
    CHECK(o.at("cases") == 27 + 256 + 81 + 10);
    CHECK(o.at("failures") == 0);

    // The flag may come before or after the subcommand.
    auto trailing = run({"suite", "embedding-example", "--json"});
    CHECK(trailing.rc == 0);
    CHECK(json::parse(trailing.out).at("suite") == "embedding-example");
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).rc == 2);
    CHECK(run({"frobnicate"}).rc == 2);
    CHECK(run({"check"}).rc == 2);
    CHECK(run({"check", "shy"}).rc == 2);
    auto help = run({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("suite") != std::string::npos);
    CHECK(help.out.find("khalimsky") != std::string::npos);
}
