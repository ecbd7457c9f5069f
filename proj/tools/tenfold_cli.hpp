#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tenfold/models.hpp"

namespace tenfold::cli {

struct RunConfig {
    enum class Command { Table, Kr, Classify, Invariant, Sweep };
    Command command = Command::Table;
    std::string format = "text"; // text | json | csv

    // model selection
    std::string model_name;
    std::string model_file;
    ModelParams overrides; // --set key=value,...
    int grid = 16;
    double tol = 1e-9;
    std::optional<std::string> az_class; // --class
    bool pauli_sweep = false;            // ignore shipped operators, sweep

    // kr
    std::string space = "torus"; // sphere | torus
    int i = 0;
    int d = 1;
    bool reduced = false;
    bool kq = false;

    // sweep
    std::string axis;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    std::string out_path;
};

/// Exit codes: 0 ok, 2 usage, 3 missing file, 4 gapless model, 5 non-convergent.
RunConfig parse_args(const std::vector<std::string>& args);

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

} // namespace tenfold::cli
