#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "outext/multdata.hpp"

namespace outext {

struct RunConfig {
    std::vector<std::string> data_paths;  // loaded after builtins, in order
    int max_degree = 2;
    bool strict = false;  // halt the recursion on the first contradiction
    enum Format { human, csv } format = human;
    bool svg = false;
    std::optional<std::string> cache_path;
};

/// Builtins through max_degree, then every *.mult file in $OUTEXT_DATA (sorted),
/// then cfg.data_paths, merged and cross-validated. File entries are tagged
/// dataset provenance.
MultTable load_tables(const RunConfig& cfg);

// Subcommand bodies; each returns the process exit code.
int cmd_ext2(const RunConfig& cfg, int n, std::ostream& out);
int cmd_recursion(const RunConfig& cfg, std::ostream& out);
int cmd_diagram(const RunConfig& cfg, int nu_size, int lambda_size,
                std::ostream& out);
int cmd_validate(const RunConfig& cfg, std::ostream& out);
int cmd_invert(const RunConfig& cfg, std::ostream& out);
int cmd_lie_check(const RunConfig& cfg, std::ostream& out);

/// Full argv entry point. Errors print one diagnostic line to err and return 1;
/// the recursion returns 2 when contradictions were found.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace outext
