// Experiment runner: loads a scenario file, dispatches one experiment
// command, and writes CSV artifacts plus a manifest into the output
// directory. Exit codes: 0 success, 2 config error, 3 numerical-guard
// error, 4 I/O error.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "jamcov/errors.hpp"
#include "jamcov/experiments.hpp"
#include "jamcov/scenario_io.hpp"
#include "jamcov/version.hpp"

namespace {

struct CliOptions {
    std::string scenario_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t samples = 0;
    bool samples_set = false;
    unsigned workers = 0;
    std::string metric;
    std::string grid;
};

void add_common_flags(CLI::App* cmd, CliOptions& options) {
    cmd->add_option("--scenario", options.scenario_path, "Scenario file (JSON)")
        ->required();
    cmd->add_option("--out", options.out_dir, "Output directory for artifacts");
    cmd->add_option("--seed", options.seed, "Override the scenario's RNG seed")
        ->each([&options](const std::string&) { options.seed_set = true; });
    cmd->add_option("--samples", options.samples, "Override the Monte Carlo sample count")
        ->each([&options](const std::string&) { options.samples_set = true; });
    cmd->add_option("--workers", options.workers,
                    "Worker threads (0 = hardware default; never changes results)");
    cmd->add_option("--metric", options.metric, "Improvement metric: delta or delta-bar")
        ->check(CLI::IsMember({"delta", "delta-bar"}));
    cmd->add_option("--grid", options.grid, "Region grid as <n_radial>x<n_angular>");
}

jamcov::RunOptions to_run_options(const CliOptions& cli) {
    jamcov::RunOptions options;
    options.out_dir = cli.out_dir;
    if (cli.seed_set) {
        options.seed = cli.seed;
    }
    if (cli.samples_set) {
        options.samples = cli.samples;
    }
    options.workers = cli.workers;
    if (!cli.metric.empty()) {
        options.metric = cli.metric == "delta" ? jamcov::DeltaKind::delta
                                               : jamcov::DeltaKind::delta_bar;
    }
    if (!cli.grid.empty()) {
        unsigned n_radial = 0, n_angular = 0;
        if (std::sscanf(cli.grid.c_str(), "%ux%u", &n_radial, &n_angular) != 2 ||
            n_radial == 0 || n_angular == 0) {
            throw jamcov::ConfigError("--grid expects <n_radial>x<n_angular>, got " + cli.grid);
        }
        options.grid = {n_radial, n_angular};
    }
    return options;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy-area metrics for UAV friendly jamming"};
    app.set_version_flag("--version", jamcov::kVersion);
    app.require_subcommand(1);

    CliOptions cli;
    std::string chosen;
    for (const std::string& name : jamcov::experiment_commands()) {
        CLI::App* cmd = app.add_subcommand(name, "Run the " + name + " experiment");
        add_common_flags(cmd, cli);
        cmd->callback([&chosen, name]() { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // Help/version requests exit cleanly; anything else is config misuse.
        return code == 0 ? 0 : 2;
    }

    try {
        const jamcov::Scenario scenario = jamcov::load_scenario(cli.scenario_path);
        const jamcov::RunOptions options = to_run_options(cli);
        const jamcov::RunResult result = jamcov::run_experiment(chosen, scenario, options);
        for (const auto& path : result.artifacts) {
            std::printf("wrote %s\n", path.string().c_str());
        }
        std::printf("wrote %s\n", result.manifest.string().c_str());
        return 0;
    } catch (const jamcov::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n",
                     e.category() == jamcov::ErrorCategory::config   ? "config"
                     : e.category() == jamcov::ErrorCategory::numeric ? "numeric"
                                                                      : "io",
                     e.what());
        return static_cast<int>(e.category());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
