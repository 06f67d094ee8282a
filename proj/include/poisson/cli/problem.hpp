#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "poisson/cohomology.hpp"
#include "poisson/gauge.hpp"
#include "poisson/liealg.hpp"

namespace poisson::cli {

using json = nlohmann::json;

struct ElementSpec {
    RationalMatrix matrix;
    std::vector<Rational> translation;
    Form b;

    friend bool operator==(const ElementSpec&, const ElementSpec&) = default;
};

// A problem file. Indices are 1-based in JSON, 0-based here.
//
//   {"dim": 3, "vars": ["x", "y", "z"],
//    "poisson": {"bivector": [[1, 2, "z"], [2, 3, "x"], [1, 3, "-y"]]}
//             | {"lie_algebra": "so3"}
//             | {"lie_algebra": {"dim": 3, "brackets": [[1, 2, [[3, "1"]]], ...]}},
//    "gauge": {"B": [[1, 2, "1"]]},
//    "elements": [{"matrix": [["1", "0"], ...], "translation": ["0", ...], "B": [...]}]}
struct ProblemFile {
    std::size_t dim = 0;
    std::vector<std::string> vars;
    std::optional<Multivector> bivector;
    std::optional<std::string> lie_builtin;
    std::optional<StructureConstants> lie_constants;
    std::optional<Form> gauge;
    std::vector<ElementSpec> elements;

    bool is_lie() const { return lie_builtin.has_value() || lie_constants.has_value(); }

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

// Throws ParseError (JSON syntax, positions in bytes), std::invalid_argument for schema
// violations and UnknownNameError for unknown Lie algebras.
ProblemFile parse_problem(std::string_view text);
ProblemFile problem_from_json(const json& doc);

// Canonical form: sorted keys, 1-based indices, rationals as "num/den", polynomials in
// graded-lex order. parse_problem(serialize(p)) == p.
json to_json(const ProblemFile& problem);
std::string serialize(const ProblemFile& problem);

// The structure described by the file; Lie algebras come back Jacobi-checked.
PoissonStructure structure(const ProblemFile& problem);
// p = 1 for Lie algebras, the coefficient degree of pi otherwise, or the override.
WeightGrading grading(const ProblemFile& problem, const PoissonStructure& pi, std::optional<unsigned> override_p);

std::vector<GaugeElement> gauge_elements(const ProblemFile& problem);

template <TensorKind Kind>
json tensor_to_json(const Alternating<Kind>& t, const std::vector<std::string>& vars);
template <TensorKind Kind>
Alternating<Kind> tensor_from_json(const json& entries, std::size_t dim, std::size_t grade,
                                   const std::vector<std::string>& vars, std::string_view where);

} // namespace poisson::cli
