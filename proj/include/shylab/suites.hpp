#ifndef SHYLAB_SUITES_HPP
#define SHYLAB_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shylab/report.hpp"

namespace shylab {

// Knobs shared by the named suites; each suite reads the ones it needs.
struct SuiteLimits {
    long long cases = 1000;   // randomized case count
    int max_size = 8;         // largest random domain
    long long window = 10;    // quotient-map verification half-window
    int max_cycle = 6;        // largest cycle in degree sweeps
    bool exhaustive = false;  // run the full enumeration where one exists
};

const std::vector<std::string>& suite_names();

// Runs one named verification suite. Everything in the report except
// elapsed_ms is a pure function of (name, seed, limits). Unknown names
// throw DomainError.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, const SuiteLimits& limits);

}  // namespace shylab

#endif
