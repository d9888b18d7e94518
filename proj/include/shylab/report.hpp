#ifndef SHYLAB_REPORT_HPP
#define SHYLAB_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace shylab {

// Outcome of one named verification suite. Everything except elapsed_ms is
// a pure function of (suite, seed, limits), so reports are reproducible and
// comparable byte-for-byte once the elapsed field is dropped.
struct SuiteReport {
    std::string suite;
    long long cases = 0;
    long long failures = 0;
    std::optional<nlohmann::json> witness;  // first counterexample, replayable through `check`
    std::vector<std::string> notes;         // observations that assert nothing
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;

    bool passed() const { return failures == 0; }

    nlohmann::json to_json() const {
        nlohmann::json j{
            {"schema", 1},
            {"suite", suite},
            {"cases", cases},
            {"failures", failures},
            {"seed", seed},
            {"elapsed_ms", elapsed_ms},
        };
        if (witness) j["witness"] = *witness;
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

}  // namespace shylab

#endif
