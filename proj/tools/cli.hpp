#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace knotwidth::cli {

enum ExitCode : int { ok = 0, io_error = 1, parse_error = 2, unsupported = 3, internal = 4 };

struct ExperimentConfig {
    std::optional<std::pair<int, int>> torus;
    std::string input;           // diagram file when torus is unset
    std::string format = "pd";
    int mutations = 10;
    int walk_length = 20;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int extra_crossings = 20;    // walk stays within base crossings + this
    std::string csv_path;
    std::string json_path;
};

// Fixture lookup: an existing path wins, then $KNOTW_FIXTURES/<name>, then the source tree.
std::string resolve_fixture(const std::string& name);

int cmd_bw(const std::string& input, const std::string& format, const std::string& decomp_path,
           const std::string& sketch_path, std::ostream& out, std::ostream& err);
int cmd_bound(int p, int q, std::ostream& out, std::ostream& err);
int cmd_experiment(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bubble(const std::string& trace, int p, int q, std::ostream& out, std::ostream& err);

// Full command line; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace knotwidth::cli
