#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace splitoct {

// One run of the batch driver. Identical configs (including seed) produce
// byte-identical JSON reports; thread count and wall time never leak into
// the report unless timing is requested explicitly.
struct RunConfig {
    std::string command;
    std::string field = "F2";
    std::string weight = "1";
    std::uint64_t budget = 1'000'000'000;   // node cap for searches
    std::uint64_t closure_cap = 100'000;    // element cap for group closures
    int threads = 1;
    std::uint64_t seed = 1;
    std::string output;                     // path; empty = stdout
    std::string kernel;                     // catalog name for search-kernel
    std::vector<std::string> files;         // positional operator files
    bool timing = false;
    std::uint64_t random_pairs = 10'000;
};

// exit codes: 0 all pass and complete, 1 assertion failure,
// 2 usage error, 3 budget exhausted with no failures
struct RunResult {
    int exit_code = 0;
    std::string report;    // JSON document
    std::string summary;   // human-readable table (stderr)
};

RunResult run(const RunConfig& config);

} // namespace splitoct
