#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slcs/checker.hpp"
#include "slcs/errors.hpp"
#include "slcs/image.hpp"
#include "slcs/model.hpp"
#include "slcs/parser.hpp"
#include "slcs/script.hpp"

namespace slcs::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

UnknownAtomPolicy policy_from_env() {
    const char* value = std::getenv("SLCS_UNKNOWN_ATOM");
    if (value == nullptr || std::string(value).empty() || std::string(value) == "error")
        return UnknownAtomPolicy::Error;
    if (std::string(value) == "empty") return UnknownAtomPolicy::Empty;
    throw std::invalid_argument("SLCS_UNKNOWN_ATOM must be 'error' or 'empty', got '" + std::string(value) + "'");
}

double millis(std::chrono::nanoseconds ns) {
    return std::chrono::duration<double, std::milli>(ns).count();
}

void print_stats(std::ostream& err, const CheckStats& s) {
    err << "subformulas=" << s.subformulas_evaluated << " points_visited=" << s.points_visited
        << " edges_traversed=" << s.edges_traversed << " until_calls=" << s.until_calls << " wall_ms=" << std::fixed
        << std::setprecision(3) << millis(s.wall_time) << '\n';
}

struct CheckArgs {
    std::string model;
    std::string formula;
    std::string output;
    bool stats = false;
};

struct RunArgs {
    std::string image;
    std::string script;
    std::string output;
    int adjacency = 4;
    bool stats = false;
};

int do_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    CheckOptions options;
    options.unknown_atoms = policy_from_env();
    const Formula f = parse_formula(args.formula);
    const ClosureModel model = load_model(read_file(args.model));
    const CheckOutcome outcome = check(model, f, options);
    const std::string json = save_result({args.formula, outcome.satisfying}, model);
    if (args.output.empty()) {
        out << json << '\n';
    } else {
        std::ofstream file(args.output, std::ios::binary);
        if (!(file << json << '\n')) throw Error("cannot write '" + args.output + "'");
    }
    if (args.stats) print_stats(err, outcome.stats);
    return kOk;
}

int do_run(const RunArgs& args, std::ostream& err) {
    ScriptOptions options;
    options.check.unknown_atoms = policy_from_env();
    options.adjacency = args.adjacency == 8 ? Adjacency::Eight : Adjacency::Four;
    const Script script = parse_script(read_file(args.script));
    const RasterImage input = read_image(args.image);
    const auto started = std::chrono::steady_clock::now();
    const ScriptResult result = run_script(input, script, options);
    write_image(result.image, args.output);
    if (args.stats) {
        for (const auto& p : result.paints) {
            err << "line " << p.line << ": painted=" << p.painted << ' ';
            print_stats(err, p.stats);
        }
        err << "total_ms=" << std::fixed << std::setprecision(3)
            << millis(std::chrono::steady_clock::now() - started) << '\n';
    }
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spatial model checker for closure models and images"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "Evaluate a formula over a JSON closure model");
    check_cmd->add_option("--model", check_args.model, "Model JSON file")->required();
    check_cmd->add_option("--formula", check_args.formula, "Formula text")->required();
    check_cmd->add_option("--output", check_args.output, "Write the result JSON here instead of stdout");
    check_cmd->add_flag("--stats", check_args.stats, "Report work counters on stderr");

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Run a paint script over an image (PPM or PNG)");
    run_cmd->add_option("--image", run_args.image, "Input image")->required();
    run_cmd->add_option("--script", run_args.script, "Script file")->required();
    run_cmd->add_option("--output", run_args.output, "Output image")->required();
    run_cmd->add_option("--adjacency", run_args.adjacency, "Pixel adjacency")->check(CLI::IsMember({4, 8}));
    run_cmd->add_flag("--stats", run_args.stats, "Report per-paint timing and work counters on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (check_cmd->parsed()) return do_check(check_args, out, err);
        return do_run(run_args, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const LoadError& e) {
        err << "load error: " << e.what() << '\n';
        return kLoadError;
    } catch (const SemanticError& e) {
        err << "error: " << e.what() << '\n';
        return kSemanticError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace slcs::cli
