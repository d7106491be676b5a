// Command-line front end: every subcommand reads a system (or builds the
// built-in one), runs one library operation, and prints a single JSON
// document on standard output.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "quartic/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact desk-scale toolkit for pairs of diagonal quartic forms"};
    app.require_subcommand(0, 1);

    quartic::RunConfig config;
    long long budget_entries = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--threads", config.threads, "worker threads (0 = automatic)");
        cmd->add_option("--budget", budget_entries, "enumeration budget in multiset entries");
        cmd->add_option("--output", config.output_path, "write the JSON document here");
        cmd->add_option_function<double>(
            "--tau", [&config](double value) { config.tau = value; },
            "dissection exponent in (0, 1e-4)");
    };
    auto add_system = [&](CLI::App* cmd) {
        cmd->add_option("--system", config.system_path,
                        "system JSON file, - for stdin, or inline JSON");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "invariants and normal form of a pair");
    add_system(analyze);
    add_common(analyze);

    CLI::App* moments = app.add_subcommand("moments", "exact even Weyl-sum moments");
    add_common(moments);
    moments->add_option_function<long long>(
        "--P", [&config](long long value) { config.P = value; }, "box height");
    moments->add_option_function<long long>(
        "--R", [&config](long long value) { config.R = value; }, "smoothness bound (default P)");
    moments->add_option("--t", config.t_values, "even moment order, repeatable");
    std::string entangled;
    moments->add_option("--entangled", entangled, "a,b,c,d for the coupled double moment");

    CLI::App* local_cmd = app.add_subcommand("local", "per-place solubility report");
    add_system(local_cmd);
    add_common(local_cmd);
    local_cmd->add_option_function<long long>(
        "--primes", [&config](long long value) { config.prime_bound = value; },
        "check p-adic places for p up to this bound");
    local_cmd->add_option_function<long long>(
        "--search-bound", [&config](long long value) { config.search_bound = value; },
        "integer box half-width");

    CLI::App* counterexample =
        app.add_subcommand("counterexample", "verify the built-in Hasse failure system");
    add_common(counterexample);
    counterexample->add_option_function<long long>(
        "--s", [&config](long long value) { config.s = value; }, "number of variables (>= 9)");
    counterexample->add_option_function<long long>(
        "--primes", [&config](long long value) { config.prime_bound = value; }, "prime bound");
    counterexample->add_option_function<long long>(
        "--search-bound", [&config](long long value) { config.search_bound = value; },
        "integer box half-width");

    CLI::App* series = app.add_subcommand("series", "truncated singular series");
    add_system(series);
    add_common(series);
    series->add_option_function<double>(
        "--X", [&config](double value) { config.X = value; }, "modulus cutoff");

    CLI::App* integral = app.add_subcommand("integral", "truncated singular integral");
    add_system(integral);
    add_common(integral);
    integral->add_option_function<long long>(
        "--P", [&config](long long value) { config.P = value; }, "scale");
    integral->add_option_function<double>(
        "--X", [&config](double value) { config.X = value; }, "box cutoff");

    CLI::App* predict = app.add_subcommand("predict", "main-term prediction");
    add_system(predict);
    add_common(predict);
    predict->add_option_function<long long>(
        "--P", [&config](long long value) { config.P = value; }, "scale");
    predict->add_option_function<double>(
        "--X", [&config](double value) { config.X = value; }, "cutoff");

    CLI::App* count = app.add_subcommand("count", "exact solution count in a box");
    add_system(count);
    add_common(count);
    count->add_option_function<long long>(
        "--P", [&config](long long value) { config.P = value; }, "box half-width");
    count->add_option_function<double>(
        "--predict", [&config](double value) { config.predict_X = value; },
        "also predict with this cutoff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (app.get_subcommands().empty()) {
        std::cerr << "error: expected a subcommand (see --help)\n";
        return 2;
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    if (!entangled.empty()) config.entangled = entangled;
    if (budget_entries > 0) {
        config.budget.max_multiset_entries = static_cast<quartic::u64>(budget_entries);
        config.budget.max_phase_ops = 2 * config.budget.max_multiset_entries;
        config.budget.max_join_pairs = 20 * config.budget.max_multiset_entries;
    }

    quartic::DispatchResult result = quartic::dispatch(config);
    if (result.has_document) {
        if (config.output_path.empty()) {
            std::cout << result.document.dump(2) << "\n";
        } else {
            std::ofstream out(config.output_path);
            if (!out) {
                std::cerr << "error: cannot write " << config.output_path << "\n";
                return 2;
            }
            out << result.document.dump(2) << "\n";
        }
    }
    if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
    return result.status;
}
