#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jamcov/area_metrics.hpp"
#include "jamcov/optimizer.hpp"
#include "jamcov/scenario.hpp"

namespace jamcov {

// Per-invocation knobs layered over the scenario file. Overrides are applied
// to the scenario before hashing, so the hash always names the effective
// configuration.
struct RunOptions {
    std::filesystem::path out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    unsigned workers = 0;
    std::optional<DeltaKind> metric;
    std::optional<std::pair<unsigned, unsigned>> grid;  // n_radial x n_angular
};

struct RunResult {
    std::vector<std::filesystem::path> artifacts;
    std::filesystem::path manifest;
};

// Experiment commands: validate, field, metrics, sweep-height, sweep-power,
// sweep-angles, optimize-theta, mc-check.
const std::vector<std::string>& experiment_commands();

// Dispatches one experiment, writes its CSV artifacts plus a manifest with a
// content digest per file, and removes partial outputs if anything throws.
RunResult run_experiment(const std::string& command, const Scenario& scenario,
                         const RunOptions& options);

}  // namespace jamcov
