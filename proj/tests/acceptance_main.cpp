// Acceptance harness: runs every verification suite at its contracted scale,
// enforces the wall-clock budgets, and prints one line per criterion. The
// exit code is the number of failed criteria, so 0 means full acceptance.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "shylab/digital_maps.hpp"
#include "shylab/generators.hpp"
#include "shylab/interval.hpp"
#include "shylab/pl_real.hpp"
#include "shylab/shapes.hpp"
#include "shylab/suites.hpp"

using namespace shylab;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("criterion %2d %-20s %s  %s\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++g_failures;
}

std::string suite_detail(const SuiteReport& rep, double budget_ms) {
    char buf[160];
    if (budget_ms > 0)
        std::snprintf(buf, sizeof buf, "(%lld cases, %lld failures, %.0f ms, budget %.0f ms)",
                      rep.cases, rep.failures, rep.elapsed_ms, budget_ms);
    else
        std::snprintf(buf, sizeof buf, "(%lld cases, %lld failures, %.0f ms)", rep.cases,
                      rep.failures, rep.elapsed_ms);
    return buf;
}

// Runs one criterion body, translating exceptions into failures instead of
// aborting the whole harness.
void criterion(int id, const char* name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        report(id, name, ok, detail);
    } catch (const std::exception& e) {
        report(id, name, false, std::string("(exception: ") + e.what() + ")");
    }
}

std::pair<bool, std::string> suite_criterion(const char* suite, SuiteLimits lim, double budget_ms,
                                             long long expected_cases = -1) {
    SuiteReport rep = run_suite(suite, 0, lim);
    bool ok = rep.failures == 0;
    if (budget_ms > 0) ok = ok && rep.elapsed_ms < budget_ms;
    if (expected_cases >= 0) ok = ok && rep.cases == expected_cases;
    std::string detail = suite_detail(rep, budget_ms);
    if (rep.witness) detail += "\n  witness: " + rep.witness->dump();
    return {ok, detail};
}

}  // namespace

int main() {
    std::printf("acceptance: fixed seed 0, budgets enforced in-process\n");

    criterion(1, "oracle-equivalence", [] {
        SuiteLimits lim;
        lim.cases = 10000;
        lim.max_size = 8;
        return suite_criterion("oracle-equivalence", lim, 60000.0, 27 + 256 + 81 + 10000);
    });

    criterion(2, "monotone-shy", [] {
        PLFunction tent({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(0)}}, false);
        auto w = pl_shy_witness(tent);
        bool tent_ok = !is_shy_pl(tent) && w.has_value() && w->preimage.size() == 2;
        SuiteLimits lim;
        lim.cases = 10000;
        auto [ok, detail] = suite_criterion("monotone-shy", lim, 30000.0);
        if (!tent_ok) detail += " [tent witness missing]";
        return std::make_pair(ok && tent_ok, detail);
    });

    criterion(3, "circle-constant", [] {
        PLFunction wave(
            {{Rat(0), Rat(0)}, {Rat(1, 4), Rat(1)}, {Rat(3, 4), Rat(-1)}, {Rat(1), Rat(0)}}, true);
        bool wave_ok = !is_shy_circle_pl(wave);
        SuiteLimits lim;
        lim.cases = 10000;
        auto [ok, detail] = suite_criterion("circle-constant", lim, 30000.0);
        if (!wave_ok) detail += " [wave wrongly judged shy]";
        return std::make_pair(ok && wave_ok, detail);
    });

    criterion(4, "khalimsky-q", [] {
        SuiteLimits lim;
        lim.window = 50;
        lim.exhaustive = true;  // adds the [-10,10]^2 box sweep
        long long line_cases = 101 * 102 / 2;
        long long box_cases = (21 * 22 / 2) * (21 * 22 / 2);
        return suite_criterion("khalimsky-q", lim, 10000.0, line_cases + box_cases);
    });

    criterion(5, "composition", [] {
        SuiteLimits lim;
        lim.cases = 5000;
        return suite_criterion("composition", lim, 120000.0, 5000);
    });

    criterion(6, "factor", [] {
        SuiteLimits lim;
        lim.cases = 5000;
        return suite_criterion("factor", lim, 0.0, 5000);
    });

    criterion(7, "wedge", [] {
        SuiteLimits lim;
        lim.cases = 5000;
        return suite_criterion("wedge", lim, 0.0, 21 * 21 + 5000);
    });

    criterion(8, "cut-point", [] {
        SuiteLimits lim;
        lim.exhaustive = true;  // 3-star with rays of 2 into [-3, 3]
        return suite_criterion("cut-point", lim, 60000.0);
    });

    criterion(9, "pi1-degree", [] {
        SuiteLimits lim;
        lim.exhaustive = true;
        lim.max_cycle = 6;
        return suite_criterion("pi1-degree", lim, 120000.0);
    });

    criterion(10, "embedding-example", [] {
        AngleMap half(PLFunction({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}}, false));
        Arc lower(Rat(1, 2), Rat(1), true, true);
        IntervalUnion pre = arc_preimage(half, lower);
        std::vector<RationalInterval> expected{RationalInterval::point(Rat(0)),
                                               RationalInterval::point(Rat(1, 2))};
        bool exact = is_shy_interval_to_circle(half) && pre.parts() == expected;
        auto [ok, detail] = suite_criterion("embedding-example", SuiteLimits{}, 0.0);
        if (!exact) detail += " [lower-arc preimage not the exact two-point set]";
        return std::make_pair(ok && exact, detail);
    });

    std::printf("acceptance: %d of 10 criteria failed\n", g_failures);
    return g_failures;
}
