#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tq/reservoir.hpp"
#include "tq/states.hpp"
#include "tq/table.hpp"

namespace tq {

struct GridRange {
    double start, stop, step;
};

// "start:stop:step" with step > 0 and stop >= start.
GridRange parse_range(const std::string& text);
std::vector<double> grid_points(const GridRange& r);

struct RunConfig {
    ReservoirParams params;
    std::optional<StateSpec> state;
    double t_max = 50.0;   // units of 1/gamma0
    double dt_out = 0.5;   // units of 1/gamma0
    std::string out_path;  // empty -> stdout
};

struct Invocation {
    std::string command;  // evolve | steady | figure | sweep
    RunConfig cfg;
    std::string figure_id;              // figure
    std::optional<GridRange> grid;      // figure temperature-grid override
    std::string sweep_param;            // sweep
    std::optional<GridRange> sweep_range;
};

// Parses argv (program name excluded). Throws CLI/format/constraint errors.
Invocation parse_cli(const std::vector<std::string>& args);

// Canonical flag string with defaults materialized;
// parse_cli on its tokens reproduces the same canonical string.
std::string canonical_flags(const Invocation& inv);

// Time traces of all collective matrix elements plus derived scalars.
SweepTable evolve_table(const RunConfig& cfg);

// Human-readable stationary-state report and its one-row CSV form.
std::string steady_report(const RunConfig& cfg);
SweepTable steady_table(const RunConfig& cfg);

// CSV reproductions of the closed-form temperature curves (fig1..fig5).
SweepTable figure_table(const std::string& id, const std::optional<GridRange>& grid);

// One row per grid point of `param` with all derived quantities
// (F, F_beta, F0, p, C_as, T_c) where defined.
SweepTable sweep_table(const std::string& param, const GridRange& range,
                       const RunConfig& cfg);

// Full command-line entry point. Exit codes: 0 success, 2 usage/parse error,
// 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tq
