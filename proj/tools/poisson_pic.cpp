#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "poisson/cli/commands.hpp"
#include "poisson/cli/report.hpp"

namespace {

using namespace poisson::cli;

unsigned default_threads()
{
    if (const char* env = std::getenv("POISSON_PIC_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
        std::cerr << "poisson_pic: ignoring invalid POISSON_PIC_THREADS='" << env << "'\n";
    }
    return 1;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Poisson cohomology, gauge transformations and the Picard Lie algebra"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "json";
    std::string k_range = "1";
    std::string w_range = "0..4";
    CommandOptions options;
    options.threads = default_threads();
    unsigned homogeneity = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "problem file (JSON)")->required();
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--threads", options.threads, "worker threads (output never depends on it)")
            ->check(CLI::PositiveNumber);
    };

    auto* jacobi = app.add_subcommand("jacobi", "check [pi, pi] = 0");
    add_common(jacobi);

    auto* cohomology = app.add_subcommand("cohomology", "weight-graded cohomology slices");
    add_common(cohomology);
    cohomology->add_option("--complex", options.complex, "de_rham, lichnerowicz, basic or cone")
        ->check(CLI::IsMember({"de_rham", "lichnerowicz", "basic", "cone"}));
    cohomology->add_option("--k-range", k_range, "cochain degrees, a..b");
    cohomology->add_option("--w-range", w_range, "weights, a..b");
    cohomology->add_flag("--witnesses", options.witnesses, "include representative cocycles");
    cohomology->add_option("--max-slice-dim", options.max_slice_dim, "refuse larger slices");
    auto* hom_c = cohomology->add_option("--homogeneity", homogeneity, "coefficient degree p of pi (for pi = 0)");

    auto* gauge = app.add_subcommand("gauge", "gauge transformations and the gauge group");
    add_common(gauge);
    auto* transform = gauge->add_flag("--transform", "pi_B for the file's gauge.B (default)");
    auto* check = gauge->add_flag("--check-member", "membership of each listed element");
    auto* compose = gauge->add_flag("--compose", "product of the listed elements, left to right");
    transform->excludes(check)->excludes(compose);
    check->excludes(compose);

    auto* les = app.add_subcommand("les", "long exact sequence consistency per weight");
    add_common(les);
    les->add_option("--w-range", w_range, "weights, a..b");
    auto* hom_l = les->add_option("--homogeneity", homogeneity, "coefficient degree p of pi (for pi = 0)");

    auto* fmt = app.add_subcommand("format", "print the problem file in canonical form");
    fmt->add_option("file", file, "problem file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::usage;
    }

    try {
        const ProblemFile problem = parse_problem(read_file(file));
        if (fmt->parsed()) {
            std::cout << serialize(problem);
            return exit_code::ok;
        }
        const auto k = parse_range(k_range);
        options.k_range = {static_cast<int>(k.first), static_cast<int>(k.second)};
        options.w_range = parse_range(w_range);
        if (hom_c->count() > 0 || hom_l->count() > 0)
            options.homogeneity = homogeneity;
        if (check->count() > 0)
            options.gauge_mode = GaugeMode::check_member;
        else if (compose->count() > 0)
            options.gauge_mode = GaugeMode::compose;

        const std::string name = app.get_subcommands().front()->get_name();
        const CommandOutcome outcome = run_command(name, problem, options);
        std::cout << render(outcome.report, format == "table" ? Format::table : Format::json);
        return outcome.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "poisson_pic: error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}
