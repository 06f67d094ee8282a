#include "poisson/cli/problem.hpp"

#include <set>
#include <stdexcept>

#include "poisson/errors.hpp"
#include "poisson/parser.hpp"

namespace poisson::cli {

namespace {

[[noreturn]] void schema_error(std::string_view where, const std::string& what)
{
    throw std::invalid_argument(std::string(where) + ": " + what);
}

void allow_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> keys)
{
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (auto k : keys)
            known = known || key == k;
        if (!known)
            schema_error(where, "unknown key '" + key + "'");
    }
}

std::size_t positive_integer(const json& v, std::string_view where)
{
    if (!v.is_number_integer() || v.get<long long>() < 1)
        schema_error(where, "expected a positive integer");
    return v.get<std::size_t>();
}

Rational rational_from_json(const json& v, std::string_view where)
{
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            schema_error(where, "bad rational \"" + v.get<std::string>() + "\" (" + e.what() + ")");
        }
    }
    schema_error(where, "expected a rational as \"num/den\" or an integer");
}

Polynomial poly_from_json(const json& v, const std::vector<std::string>& vars, std::string_view where)
{
    if (!v.is_string())
        schema_error(where, "expected a polynomial string");
    try {
        return parse_poly(v.get<std::string>(), vars);
    } catch (const ParseError& e) {
        throw ParseError(std::string(where) + ": " + e.message() + " in \"" + v.get<std::string>() + "\"",
                         e.position());
    }
}

StructureConstants constants_from_json(const json& v, std::string_view where)
{
    if (!v.is_object())
        schema_error(where, "expected a builtin name or {\"dim\", \"brackets\"}");
    allow_keys(v, where, {"dim", "brackets"});
    if (!v.contains("dim"))
        schema_error(where, "missing \"dim\"");
    const std::size_t n = positive_integer(v["dim"], std::string(where) + ".dim");
    std::vector<StructureConstants::Bracket> brackets;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const json empty = json::array();
    const json& list = v.contains("brackets") ? v["brackets"] : empty;
    if (!list.is_array())
        schema_error(where, "\"brackets\" must be an array");
    for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string at = std::string(where) + ".brackets[" + std::to_string(e) + "]";
        const json& b = list[e];
        if (!b.is_array() || b.size() != 3 || !b[2].is_array())
            schema_error(at, "expected [i, j, [[k, \"c\"], ...]]");
        const std::size_t i = positive_integer(b[0], at);
        const std::size_t j = positive_integer(b[1], at);
        if (i >= j || j > n)
            schema_error(at, "need 1 <= i < j <= dim");
        if (!seen.emplace(i, j).second)
            schema_error(at, "repeated bracket");
        StructureConstants::Bracket out{i - 1, j - 1, {}};
        std::set<std::size_t> ks;
        for (const json& term : b[2]) {
            if (!term.is_array() || term.size() != 2)
                schema_error(at, "expected [k, \"c\"] terms");
            const std::size_t k = positive_integer(term[0], at);
            if (k > n)
                schema_error(at, "k out of range");
            if (!ks.insert(k).second)
                schema_error(at, "repeated k");
            Rational c = rational_from_json(term[1], at);
            if (!c.is_zero())
                out.terms.emplace_back(k - 1, std::move(c));
        }
        brackets.push_back(std::move(out));
    }
    return StructureConstants::from_brackets(n, brackets);
}

json constants_to_json(const StructureConstants& c)
{
    json brackets = json::array();
    for (const auto& b : c.brackets()) {
        json terms = json::array();
        for (const auto& [k, v] : b.terms)
            terms.push_back({k + 1, v.to_string()});
        brackets.push_back({b.i + 1, b.j + 1, terms});
    }
    return {{"dim", c.dim()}, {"brackets", brackets}};
}

} // namespace

template <TensorKind Kind>
json tensor_to_json(const Alternating<Kind>& t, const std::vector<std::string>& vars)
{
    json out = json::array();
    for (const auto& [idx, c] : t.coeffs()) {
        json entry = json::array();
        for (std::size_t i : idx)
            entry.push_back(i + 1);
        entry.push_back(to_string(c, vars));
        out.push_back(std::move(entry));
    }
    return out;
}

template <TensorKind Kind>
Alternating<Kind> tensor_from_json(const json& entries, std::size_t dim, std::size_t grade,
                                   const std::vector<std::string>& vars, std::string_view where)
{
    if (!entries.is_array())
        schema_error(where, "expected an array of [indices..., \"poly\"] entries");
    Alternating<Kind> t(dim, grade);
    std::set<IndexSet> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string at = std::string(where) + "[" + std::to_string(e) + "]";
        const json& entry = entries[e];
        if (!entry.is_array() || entry.size() != grade + 1)
            schema_error(at, "expected " + std::to_string(grade) + " indices and a polynomial");
        IndexSet idx;
        for (std::size_t q = 0; q < grade; ++q) {
            const std::size_t i = positive_integer(entry[q], at);
            if (i > dim)
                schema_error(at, "index " + std::to_string(i) + " exceeds dim " + std::to_string(dim));
            if (!idx.empty() && i - 1 <= idx.back())
                schema_error(at, "indices must strictly increase");
            idx.push_back(i - 1);
        }
        if (!seen.insert(idx).second)
            schema_error(at, "repeated index tuple");
        t.add_term(idx, poly_from_json(entry[grade], vars, at));
    }
    return t;
}

template json tensor_to_json(const Multivector&, const std::vector<std::string>&);
template json tensor_to_json(const Form&, const std::vector<std::string>&);
template Multivector tensor_from_json(const json&, std::size_t, std::size_t, const std::vector<std::string>&,
                                      std::string_view);
template Form tensor_from_json(const json&, std::size_t, std::size_t, const std::vector<std::string>&,
                               std::string_view);

ProblemFile parse_problem(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return problem_from_json(doc);
}

ProblemFile problem_from_json(const json& doc)
{
    if (!doc.is_object())
        schema_error("problem", "expected a JSON object");
    allow_keys(doc, "problem", {"dim", "vars", "poisson", "gauge", "elements"});
    ProblemFile p;

    if (!doc.contains("poisson") || !doc["poisson"].is_object())
        schema_error("problem", "missing \"poisson\" object");
    const json& poisson = doc["poisson"];
    allow_keys(poisson, "poisson", {"bivector", "lie_algebra"});
    if (poisson.contains("bivector") == poisson.contains("lie_algebra"))
        schema_error("poisson", "give exactly one of \"bivector\" and \"lie_algebra\"");

    if (poisson.contains("lie_algebra")) {
        const json& lie = poisson["lie_algebra"];
        if (lie.is_string()) {
            p.lie_builtin = lie.get<std::string>();
            p.dim = builtin(*p.lie_builtin).dim();
        } else {
            p.lie_constants = constants_from_json(lie, "poisson.lie_algebra");
            p.dim = p.lie_constants->dim();
        }
        if (doc.contains("dim") && positive_integer(doc["dim"], "dim") != p.dim)
            schema_error("dim", "does not match the Lie algebra dimension " + std::to_string(p.dim));
    } else {
        if (!doc.contains("dim"))
            schema_error("problem", "missing \"dim\"");
        p.dim = positive_integer(doc["dim"], "dim");
    }

    if (doc.contains("vars")) {
        if (!doc["vars"].is_array())
            schema_error("vars", "expected an array of names");
        for (const json& v : doc["vars"]) {
            if (!v.is_string())
                schema_error("vars", "expected an array of names");
            p.vars.push_back(v.get<std::string>());
        }
        if (p.vars.size() != p.dim)
            schema_error("vars", "expected " + std::to_string(p.dim) + " names");
        validate_var_names(p.vars);
    } else {
        p.vars = default_var_names(p.dim);
    }

    if (poisson.contains("bivector"))
        p.bivector = tensor_from_json<TensorKind::multivector>(poisson["bivector"], p.dim, 2, p.vars,
                                                               "poisson.bivector");

    if (doc.contains("gauge")) {
        const json& g = doc["gauge"];
        if (!g.is_object() || !g.contains("B"))
            schema_error("gauge", "expected {\"B\": [...]}");
        allow_keys(g, "gauge", {"B"});
        p.gauge = tensor_from_json<TensorKind::form>(g["B"], p.dim, 2, p.vars, "gauge.B");
    }

    if (doc.contains("elements")) {
        const json& list = doc["elements"];
        if (!list.is_array())
            schema_error("elements", "expected an array");
        for (std::size_t e = 0; e < list.size(); ++e) {
            const std::string at = "elements[" + std::to_string(e) + "]";
            const json& el = list[e];
            if (!el.is_object() || !el.contains("matrix"))
                schema_error(at, "expected {\"matrix\", \"translation\", \"B\"}");
            allow_keys(el, at, {"matrix", "translation", "B"});
            ElementSpec spec{RationalMatrix(p.dim, p.dim), std::vector<Rational>(p.dim), Form(p.dim, 2)};
            const json& m = el["matrix"];
            if (!m.is_array() || m.size() != p.dim)
                schema_error(at + ".matrix", "expected " + std::to_string(p.dim) + " rows");
            for (std::size_t i = 0; i < p.dim; ++i) {
                if (!m[i].is_array() || m[i].size() != p.dim)
                    schema_error(at + ".matrix", "expected " + std::to_string(p.dim) + " columns");
                for (std::size_t j = 0; j < p.dim; ++j)
                    spec.matrix(i, j) = rational_from_json(m[i][j], at + ".matrix");
            }
            if (el.contains("translation")) {
                const json& t = el["translation"];
                if (!t.is_array() || t.size() != p.dim)
                    schema_error(at + ".translation", "expected " + std::to_string(p.dim) + " entries");
                for (std::size_t i = 0; i < p.dim; ++i)
                    spec.translation[i] = rational_from_json(t[i], at + ".translation");
            }
            if (el.contains("B"))
                spec.b = tensor_from_json<TensorKind::form>(el["B"], p.dim, 2, p.vars, at + ".B");
            p.elements.push_back(std::move(spec));
        }
    }
    return p;
}

json to_json(const ProblemFile& p)
{
    json doc;
    doc["dim"] = p.dim;
    doc["vars"] = p.vars;
    if (p.bivector)
        doc["poisson"] = {{"bivector", tensor_to_json(*p.bivector, p.vars)}};
    else if (p.lie_builtin)
        doc["poisson"] = {{"lie_algebra", *p.lie_builtin}};
    else if (p.lie_constants)
        doc["poisson"] = {{"lie_algebra", constants_to_json(*p.lie_constants)}};
    if (p.gauge)
        doc["gauge"] = {{"B", tensor_to_json(*p.gauge, p.vars)}};
    if (!p.elements.empty()) {
        json list = json::array();
        for (const auto& e : p.elements) {
            json rows = json::array();
            for (std::size_t i = 0; i < p.dim; ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < p.dim; ++j)
                    row.push_back(e.matrix(i, j).to_string());
                rows.push_back(std::move(row));
            }
            json translation = json::array();
            for (const auto& t : e.translation)
                translation.push_back(t.to_string());
            list.push_back({{"matrix", rows}, {"translation", translation}, {"B", tensor_to_json(e.b, p.vars)}});
        }
        doc["elements"] = std::move(list);
    }
    return doc;
}

std::string serialize(const ProblemFile& problem)
{
    return to_json(problem).dump(2) + "\n";
}

PoissonStructure structure(const ProblemFile& p)
{
    if (p.lie_builtin)
        return linear_poisson(builtin(*p.lie_builtin));
    if (p.lie_constants)
        return linear_poisson(*p.lie_constants);
    if (!p.bivector)
        throw std::invalid_argument("problem has no Poisson structure");
    return PoissonStructure(*p.bivector);
}

WeightGrading grading(const ProblemFile& p, const PoissonStructure& pi, std::optional<unsigned> override_p)
{
    if (override_p)
        return WeightGrading::with_degree(pi, *override_p);
    if (p.is_lie())
        return WeightGrading::with_degree(pi, 1);
    return WeightGrading::for_structure(pi);
}

std::vector<GaugeElement> gauge_elements(const ProblemFile& p)
{
    std::vector<GaugeElement> out;
    for (const auto& e : p.elements)
        out.emplace_back(AffineMap(e.matrix, e.translation), e.b);
    return out;
}

} // namespace poisson::cli
