#pragma once

#include <string>
#include <vector>

#include "poisson/cli/problem.hpp"

namespace poisson::cli {

// Snapshot of the sign conventions, embedded in every report.
json convention_json();

json cochain_json(const Cochain& c, const std::vector<std::string>& vars);
json pair_json(const InfGaugePair& p, const std::vector<std::string>& vars);

enum class Format { json, table };

// JSON: two-space indented, keys sorted. Table: rendered from the same JSON, so it never
// carries information the JSON lacks.
std::string render(const json& report, Format format);

} // namespace poisson::cli
