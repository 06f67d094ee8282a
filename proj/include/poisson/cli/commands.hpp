#pragma once

#include <exception>
#include <optional>
#include <string>
#include <utility>

#include "poisson/cli/problem.hpp"

namespace poisson::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;       // a requested check answered "no"
inline constexpr int usage = 2;          // bad flags, bad JSON, bad polynomial text
inline constexpr int precondition = 3;   // not Poisson, not homogeneous, slice too large
inline constexpr int not_invertible = 4;
inline constexpr int not_closed = 5;
inline constexpr int not_member = 6;
inline constexpr int internal = 10;      // a theorem-backed identity failed
} // namespace exit_code

int exit_code_for(const std::exception& e);

enum class GaugeMode { transform, check_member, compose };

struct CommandOptions {
    std::string complex = "cone";
    std::pair<int, int> k_range{1, 1};
    std::pair<long, long> w_range{0, 4};
    bool witnesses = false;
    std::size_t max_slice_dim = 5000;
    std::optional<unsigned> homogeneity;
    GaugeMode gauge_mode = GaugeMode::transform;
    // Wall time only; never part of the report.
    unsigned threads = 1;
};

struct CommandOutcome {
    json report;
    int exit_code = exit_code::ok;
};

// Each command returns its report; errors escape as exceptions (see exit_code_for).
CommandOutcome run_jacobi(const ProblemFile& problem);
CommandOutcome run_cohomology(const ProblemFile& problem, const CommandOptions& options);
CommandOutcome run_gauge(const ProblemFile& problem, const CommandOptions& options);
CommandOutcome run_les(const ProblemFile& problem, const CommandOptions& options);

CommandOutcome run_command(const std::string& name, const ProblemFile& problem, const CommandOptions& options);

// "a..b" or "a"
std::pair<long, long> parse_range(const std::string& text);

} // namespace poisson::cli
