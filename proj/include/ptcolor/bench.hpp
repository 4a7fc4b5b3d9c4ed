#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ptc {

struct BenchOptions {
    /// "reduction", "solver" or "detect".
    std::string suite;
    std::uint64_t seed = 0;
    int jobs = 1;
    /// Instances; 0 picks the suite default (200 / 500 / 300).
    int count = 0;
    /// Corpus order bound for solver and detect.
    int n = 14;
    /// When set, the solver suite writes one reloadable witness file per instance.
    std::string witness_dir;
    /// Echoed verbatim into the report.
    std::vector<std::string> command;
};

/// Runs a suite and returns its RunReport. Results are listed by instance id
/// whatever the completion order; every timing sits under a "time_ms" key.
/// Throws std::invalid_argument on an unknown suite.
nlohmann::json run_bench(const BenchOptions& opt);

/// Copy of `report` with every "time_ms" member removed.
nlohmann::json without_timings(const nlohmann::json& report);

/// Witness file written by the solver suite: {"n", "edges", "verdict", "coloring"}.
/// True iff it parses, and a colorable verdict carries a proper 4-coloring.
bool witness_file_valid(const std::string& path, std::string* why = nullptr);

}  // namespace ptc
