// subdom: sub-total domination and exact total domination over graph streams.

#include "subdom/graph.hpp"
#include "subdom/graph6.hpp"
#include "subdom/invariants.hpp"
#include "subdom/solver.hpp"
#include "subdom/survey.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

constexpr int exit_clean = 0;
constexpr int exit_violations = 1;
constexpr int exit_input_error = 2;

struct InputOptions {
    std::string format = "graph6";
    bool lenient = false;
    bool skip_malformed = false;
};

struct SolveFlags {
    std::size_t cap = subdom::default_solver_cap;
    std::optional<std::uint64_t> budget;
    unsigned jobs = 1;
    bool no_assert = false;
};

class Input {
public:
    explicit Input(const std::string & path)
    {
        if (path == "-")
            return;
        file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
        if (! *file_)
            throw std::runtime_error("cannot open '" + path + "'");
    }

    auto stream() -> std::istream & { return file_ ? *file_ : std::cin; }

private:
    std::unique_ptr<std::ifstream> file_;
};

auto add_input_options(CLI::App * cmd, InputOptions & in) -> void
{
    cmd->add_option("--format", in.format, "Input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    cmd->add_flag("--lenient", in.lenient, "Accept nonzero graph6 padding bits with a warning");
    cmd->add_flag("--skip-malformed", in.skip_malformed, "Skip undecodable records instead of aborting");
}

auto add_solve_options(CLI::App * cmd, SolveFlags & flags) -> void
{
    cmd->add_option("--cap", flags.cap, "Largest order handed to the exact solver")
        ->check(CLI::Range(std::size_t{2}, subdom::max_solver_cap))
        ->capture_default_str();
    cmd->add_option("--budget", flags.budget, "Search-node budget per graph");
    cmd->add_option("--jobs,-j", flags.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_flag("--no-assert", flags.no_assert, "Do not check the bound relations per graph");
}

auto survey_options(const InputOptions & in, const SolveFlags & flags) -> subdom::SurveyOptions
{
    subdom::SurveyOptions o;
    o.solver.cap = flags.cap;
    o.solver.budget = flags.budget;
    o.jobs = flags.jobs;
    o.assertions = ! flags.no_assert;
    o.skip_malformed = in.skip_malformed;
    return o;
}

auto make_stream(Input & input, const InputOptions & in) -> subdom::GraphStream
{
    return subdom::GraphStream(input.stream(), subdom::format_from_name(in.format), {.strict = ! in.lenient});
}

auto report_warnings(const subdom::GraphStream & stream) -> void
{
    for (const auto & w : stream.warnings())
        std::cerr << "warning: " << w << '\n';
}

auto finish(const subdom::SurveySummary & summary, std::ostream & out) -> int
{
    out << subdom::to_json(summary).dump() << '\n';
    return summary.violations.empty() ? exit_clean : exit_violations;
}

auto run_reports(const std::string & path, const InputOptions & in, subdom::SurveyOptions options, bool csv) -> int
{
    Input input(path);
    auto stream = make_stream(input, in);
    if (csv)
        std::cout << subdom::csv_header() << '\n';
    auto summary = subdom::survey_stream(stream, options, [&](const subdom::InvariantReport & r, const subdom::Record &) {
        if (csv)
            std::cout << subdom::to_csv(r) << '\n';
        else
            std::cout << subdom::to_json(r).dump() << '\n';
    });
    report_warnings(stream);
    return finish(summary, std::cerr);
}

auto run_gen(const std::string & family, const std::vector<std::size_t> & params, bool g6) -> int
{
    auto g = subdom::generate_family(subdom::family_from_name(family), params);
    if (g6)
        std::cout << subdom::write_graph6_record(g) << '\n';
    else
        std::cout << subdom::write_edge_list(g);
    return exit_clean;
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Sub-total domination bounds and exact total domination numbers"};
    app.require_subcommand(1);

    InputOptions in;
    SolveFlags flags;
    std::string file, second_file;
    bool csv = false;

    auto * invariants = app.add_subcommand("invariants", "Degree-sequence invariants per graph (JSON lines)");
    invariants->add_option("file", file, "Input file, '-' for stdin")->required();
    add_input_options(invariants, in);
    invariants->add_flag("--csv", csv, "Emit CSV instead of JSON lines");
    invariants->add_flag("--no-assert", flags.no_assert, "Do not check the bound relations per graph");

    auto * solve = app.add_subcommand("solve", "Invariants plus exact total domination number per graph");
    solve->add_option("file", file, "Input file, '-' for stdin")->required();
    add_input_options(solve, in);
    add_solve_options(solve, flags);
    solve->add_flag("--csv", csv, "Emit CSV instead of JSON lines");

    auto * tight = app.add_subcommand("tight", "Print records whose total domination number equals sub_t");
    tight->add_option("file", file, "Input file, '-' for stdin")->required();
    add_input_options(tight, in);
    add_solve_options(tight, flags);

    auto * union_check = app.add_subcommand("union-check", "Check the disjoint-union relations on paired records");
    union_check->add_option("first", file, "First input file")->required();
    union_check->add_option("second", second_file, "Second input file")->required();
    add_input_options(union_check, in);
    add_solve_options(union_check, flags);

    std::string family;
    std::vector<std::size_t> params;
    bool g6 = false;
    auto * gen = app.add_subcommand("gen", "Emit a named graph (edge list, or graph6 with --g6)");
    gen->add_option("family", family,
            "path | cycle | star | double_star | complete | complete_bipartite | circulant")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_flag("--g6", g6, "Emit graph6");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_clean : exit_input_error;
    }

    try {
        if (invariants->parsed()) {
            auto options = survey_options(in, flags);
            options.solve = false;
            return run_reports(file, in, options, csv);
        }
        if (solve->parsed())
            return run_reports(file, in, survey_options(in, flags), csv);
        if (tight->parsed()) {
            Input input(file);
            auto stream = make_stream(input, in);
            auto summary = subdom::tightness_filter(stream, survey_options(in, flags), std::cout);
            report_warnings(stream);
            return finish(summary, std::cerr);
        }
        if (union_check->parsed()) {
            Input a(file), b(second_file);
            auto first = make_stream(a, in);
            auto second = make_stream(b, in);
            auto summary = subdom::pair_union_check(first, second, survey_options(in, flags));
            report_warnings(first);
            report_warnings(second);
            return finish(summary, std::cout);
        }
        if (gen->parsed())
            return run_gen(family, params, g6);
    }
    catch (const std::exception & e) {
        std::cerr << "subdom: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}
