#include "poisson/cli/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "poisson/calculus.hpp"

namespace poisson::cli {

json convention_json()
{
    return {
        {"schouten", std::string(SignConvention::schouten)},
        {"contraction", std::string(SignConvention::contraction)},
        {"sharp", std::string(SignConvention::sharp)},
        {"lichnerowicz", std::string(SignConvention::lichnerowicz)},
        {"chain_map_sign", SignConvention::chain_map_sign},
        {"cone_differential", "d(a,b)=(da, pi#(a) - eps*d_pi(b))"},
        {"weights", "forms: d+k; multivectors: d+k(1-p)"},
    };
}

json cochain_json(const Cochain& c, const std::vector<std::string>& vars)
{
    json out = json::object();
    if (c.form)
        out["form"] = tensor_to_json(*c.form, vars);
    if (c.field)
        out["field"] = tensor_to_json(*c.field, vars);
    return out;
}

json pair_json(const InfGaugePair& p, const std::vector<std::string>& vars)
{
    return {{"Z", tensor_to_json(p.z, vars)}, {"beta", tensor_to_json(p.beta, vars)}};
}

namespace {

std::string scalar_text(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

bool is_scalar(const json& v)
{
    return v.is_primitive();
}

bool is_table(const json& v)
{
    return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& r) { return r.is_object(); });
}

void render_table(std::ostringstream& os, const std::string& title, const json& rows)
{
    std::set<std::string> names;
    bool omitted = false;
    for (const auto& row : rows)
        for (const auto& [k, v] : row.items()) {
            if (is_scalar(v))
                names.insert(k);
            else
                omitted = true;
        }
    // Index columns first, the rest alphabetically.
    std::vector<std::string> columns;
    for (const char* key : {"index", "k", "weight"})
        if (names.erase(key))
            columns.emplace_back(key);
    columns.insert(columns.end(), names.begin(), names.end());
    std::vector<std::size_t> width;
    for (const auto& c : columns) {
        std::size_t w = c.size();
        for (const auto& row : rows)
            if (row.contains(c))
                w = std::max(w, scalar_text(row[c]).size());
        width.push_back(w);
    }
    os << title << ":\n";
    auto line = [&](auto cell) {
        os << " ";
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const std::string text = cell(i);
            os << ' ' << std::string(width[i] - text.size(), ' ') << text;
        }
        os << '\n';
    };
    line([&](std::size_t i) { return columns[i]; });
    for (const auto& row : rows)
        line([&](std::size_t i) { return row.contains(columns[i]) ? scalar_text(row[columns[i]]) : std::string("-"); });
    if (omitted)
        os << "  (structured fields omitted; see --format json)\n";
}

void render_value(std::ostringstream& os, const std::string& key, const json& v)
{
    if (is_scalar(v)) {
        os << key << ": " << scalar_text(v) << '\n';
    } else if (is_table(v)) {
        render_table(os, key, v);
    } else if (v.is_object()) {
        for (const auto& [k, sub] : v.items())
            render_value(os, key + "." + k, sub);
    } else {
        os << key << ": " << v.dump() << '\n';
    }
}

} // namespace

std::string render(const json& report, Format format)
{
    if (format == Format::json)
        return report.dump(2) + "\n";
    std::ostringstream os;
    if (report.contains("command"))
        os << "command: " << scalar_text(report["command"].value("name", json("?"))) << '\n';
    if (report.contains("status"))
        os << "status: " << scalar_text(report["status"]) << '\n';
    if (report.contains("results"))
        for (const auto& [k, v] : report["results"].items())
            render_value(os, k, v);
    return os.str();
}

} // namespace poisson::cli
