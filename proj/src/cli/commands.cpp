#include "poisson/cli/commands.hpp"

#include <charconv>
#include <stdexcept>

#include "poisson/cli/report.hpp"
#include "poisson/errors.hpp"
#include "poisson/parser.hpp"

namespace poisson::cli {

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UnknownNameError*>(&e)
        || dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const json::exception*>(&e))
        return exit_code::usage;
    if (dynamic_cast<const NotInvertibleError*>(&e))
        return exit_code::not_invertible;
    if (dynamic_cast<const NotClosedError*>(&e))
        return exit_code::not_closed;
    if (dynamic_cast<const NotMemberError*>(&e))
        return exit_code::not_member;
    if (dynamic_cast<const ConsistencyError*>(&e))
        return exit_code::internal;
    if (dynamic_cast<const Error*>(&e))
        return exit_code::precondition;
    return exit_code::internal;
}

std::pair<long, long> parse_range(const std::string& text)
{
    auto number = [&](std::string_view s) {
        long v = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
            throw std::invalid_argument("bad range '" + text + "'; expected a..b");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = number(text);
        return {v, v};
    }
    const long lo = number(std::string_view(text).substr(0, dots));
    const long hi = number(std::string_view(text).substr(dots + 2));
    if (hi < lo)
        throw std::invalid_argument("empty range '" + text + "'");
    return {lo, hi};
}

namespace {

json envelope(const std::string& name, const ProblemFile& problem, json options)
{
    return {
        {"command", {{"name", name}, {"options", std::move(options)}, {"problem", to_json(problem)}}},
        {"convention", convention_json()},
    };
}

PoissonStructure verified_structure(const ProblemFile& problem, const char* operation)
{
    PoissonStructure pi = structure(problem);
    if (!pi.is_verified())
        jacobi_check(pi);
    pi.require_verified(operation);
    return pi;
}

json element_json(const GaugeElement& g, const std::vector<std::string>& vars)
{
    const std::size_t n = g.dim();
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(g.map().matrix()(i, j).to_string());
        rows.push_back(std::move(row));
    }
    json translation = json::array();
    for (const auto& t : g.map().translation())
        translation.push_back(t.to_string());
    return {{"matrix", rows}, {"translation", translation}, {"B", tensor_to_json(g.form(), vars)}};
}

} // namespace

CommandOutcome run_jacobi(const ProblemFile& problem)
{
    CommandOutcome out;
    out.report = envelope("jacobi", problem, json::object());
    PoissonStructure pi = structure(problem);
    const bool ok = pi.is_verified() || jacobi_check(pi);
    json results{{"jacobi", ok}};
    if (!ok)
        results["obstruction"] = tensor_to_json(schouten(pi.bivector(), pi.bivector()), problem.vars);
    if (const auto s = euler_homogeneity(pi))
        results["euler_homogeneity"] = *s;
    else
        results["euler_homogeneity"] = "not homogeneous";
    out.report["results"] = std::move(results);
    out.report["status"] = ok ? "pass" : "fail";
    out.exit_code = ok ? exit_code::ok : exit_code::negative;
    return out;
}

CommandOutcome run_cohomology(const ProblemFile& problem, const CommandOptions& options)
{
    const auto kind = parse_complex_kind(options.complex);
    if (!kind)
        throw std::invalid_argument("unknown complex '" + options.complex
                                    + "'; expected de_rham, lichnerowicz, basic or cone");
    json echo{{"complex", std::string(to_string(*kind))},
              {"k_range", {options.k_range.first, options.k_range.second}},
              {"w_range", {options.w_range.first, options.w_range.second}},
              {"witnesses", options.witnesses},
              {"max_slice_dim", options.max_slice_dim}};
    if (options.homogeneity)
        echo["homogeneity"] = *options.homogeneity;

    CommandOutcome out;
    out.report = envelope("cohomology", problem, echo);

    PoissonStructure pi = structure(problem);
    WeightGrading g;
    if (*kind == ComplexKind::de_rham) {
        try {
            g = grading(problem, pi, options.homogeneity);
        } catch (const NotHomogeneousError&) {
            g = WeightGrading{0};  // de Rham weights do not involve pi
        }
    } else {
        pi = verified_structure(problem, "cohomology");
        g = grading(problem, pi, options.homogeneity);
    }

    CohomologyOptions copts;
    copts.witnesses = options.witnesses;
    copts.max_slice_dim = options.max_slice_dim;
    copts.threads = options.threads;
    const CohomologyReport report = cohomology_dims(*kind, pi, g, options.k_range.first, options.k_range.second,
                                                    options.w_range.first, options.w_range.second, copts);

    // Cone H^1 witnesses are reported as (Z, beta) pairs.
    std::vector<PicSlice> pic;
    if (options.witnesses && *kind == ComplexKind::cone && options.k_range.first <= 1 && options.k_range.second >= 1)
        pic = pic_dims(pi, g, options.w_range.first, options.w_range.second, copts);

    json slices = json::array();
    for (const auto& s : report.slices) {
        json row{{"k", s.k}, {"weight", s.weight}, {"cochains", s.cochains}, {"kernel", s.kernel},
                 {"image", s.image}, {"dim", s.dim}};
        if (s.k >= 0 && *kind != ComplexKind::cone) {
            const auto d = *kind == ComplexKind::lichnerowicz
                ? g.multivector_degree(static_cast<std::size_t>(s.k), s.weight)
                : g.form_degree(static_cast<std::size_t>(s.k), s.weight);
            if (d)
                row["degree"] = *d;
        }
        if (options.witnesses) {
            json reps = json::array();
            if (*kind == ComplexKind::cone && s.k == 1) {
                const auto& ps = pic.at(static_cast<std::size_t>(s.weight - options.w_range.first));
                for (const auto& p : ps.representatives)
                    reps.push_back(pair_json(p, problem.vars));
            } else {
                for (const auto& c : s.representatives)
                    reps.push_back(cochain_json(c, problem.vars));
            }
            row["representatives"] = std::move(reps);
        }
        slices.push_back(std::move(row));
    }
    out.report["results"] = {{"complex", std::string(to_string(*kind))},
                             {"grading_p", g.p},
                             {"label", "polynomial slice"},
                             {"slices", std::move(slices)}};
    out.report["status"] = "pass";
    return out;
}

CommandOutcome run_gauge(const ProblemFile& problem, const CommandOptions& options)
{
    const char* mode = options.gauge_mode == GaugeMode::transform ? "transform"
        : options.gauge_mode == GaugeMode::check_member           ? "check-member"
                                                                  : "compose";
    CommandOutcome out;
    out.report = envelope("gauge", problem, {{"mode", mode}});
    const PoissonStructure pi = verified_structure(problem, "gauge");
    json results;
    bool pass = true;

    switch (options.gauge_mode) {
    case GaugeMode::transform: {
        if (!problem.gauge)
            throw std::invalid_argument("--transform needs a \"gauge\": {\"B\": ...} entry");
        const PoissonStructure transformed = gauge_transform(pi, *problem.gauge);
        results["determinant"] = to_string(gauge_determinant(pi.bivector(), *problem.gauge), problem.vars);
        results["transformed"] = tensor_to_json(transformed.bivector(), problem.vars);
        break;
    }
    case GaugeMode::check_member: {
        const auto elements = gauge_elements(problem);
        if (elements.empty())
            throw std::invalid_argument("--check-member needs an \"elements\" list");
        json verdicts = json::array();
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const bool member = is_member(elements[i], pi);
            pass = pass && member;
            verdicts.push_back({{"index", i + 1}, {"member", member}});
        }
        results["elements"] = std::move(verdicts);
        break;
    }
    case GaugeMode::compose: {
        const auto elements = gauge_elements(problem);
        if (elements.empty())
            throw std::invalid_argument("--compose needs an \"elements\" list");
        GaugeElement acc = elements.front();
        if (!is_member(acc, pi))
            throw NotMemberError("element 1 is not in the gauge group of pi");
        for (std::size_t i = 1; i < elements.size(); ++i)
            acc = gauge_compose(acc, elements[i], pi);
        if (!is_member(acc, pi))
            throw ConsistencyError("a product of gauge group members left the group");
        results["composed"] = element_json(acc, problem.vars);
        results["member"] = true;
        break;
    }
    }
    out.report["results"] = std::move(results);
    out.report["status"] = pass ? "pass" : "fail";
    out.exit_code = pass ? exit_code::ok : exit_code::negative;
    return out;
}

CommandOutcome run_les(const ProblemFile& problem, const CommandOptions& options)
{
    json echo{{"w_range", {options.w_range.first, options.w_range.second}}};
    if (options.homogeneity)
        echo["homogeneity"] = *options.homogeneity;
    CommandOutcome out;
    out.report = envelope("les", problem, echo);
    const PoissonStructure pi = verified_structure(problem, "les");
    const WeightGrading g = grading(problem, pi, options.homogeneity);

    bool all = true;
    json rows = json::array();
    for (long w = options.w_range.first; w <= options.w_range.second; ++w) {
        const LesReport r = les_consistency(pi, g, w);
        all = all && r.consistent();
        json row{{"weight", r.weight},
                 {"h1_de_rham", r.h1_de_rham},
                 {"h1_poisson", r.h1_poisson},
                 {"pic", r.pic},
                 {"h2_de_rham", r.h2_de_rham},
                 {"h2_poisson", r.h2_poisson},
                 {"rank_sharp1", r.rank_sharp1},
                 {"rank_inclusion", r.rank_inclusion},
                 {"rank_projection", r.rank_projection},
                 {"rank_sharp2", r.rank_sharp2},
                 {"compositions_zero", r.compositions_zero},
                 {"dimension_formula", r.dimension_formula},
                 {"exact", r.consistent()}};
        if (r.quotient_applicable)
            row["quotient_formula"] = r.quotient_formula;
        rows.push_back(std::move(row));
    }
    out.report["results"] = {{"grading_p", g.p}, {"label", "polynomial slice"}, {"rows", std::move(rows)}};
    out.report["status"] = all ? "pass" : "fail";
    out.exit_code = all ? exit_code::ok : exit_code::internal;
    return out;
}

CommandOutcome run_command(const std::string& name, const ProblemFile& problem, const CommandOptions& options)
{
    if (name == "jacobi")
        return run_jacobi(problem);
    if (name == "cohomology")
        return run_cohomology(problem, options);
    if (name == "gauge")
        return run_gauge(problem, options);
    if (name == "les")
        return run_les(problem, options);
    throw std::invalid_argument("unknown command '" + name + "'");
}

} // namespace poisson::cli
