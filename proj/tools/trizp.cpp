#include "trizp/workspace.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace trizp::cli;

    CLI::App app{"Solve and verify zero-product functional identities on finite triangular rings"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    std::string config;
    RunFlags flags;
    std::uint64_t bound = 0;
    app.add_option("--config", config, "Workspace config (YAML)")->required();
    app.add_option("--out-dir", flags.out_dir, "Directory for JSON reports")->capture_default_str();
    app.add_option("--workers", flags.workers, "Worker threads for constraint compilation")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    auto* bound_opt = app.add_option("--bound", bound, "Enumeration bound (overrides the config)")
                          ->check(CLI::PositiveNumber);
    app.add_option("--seed", flags.seed, "Seed for randomized spot checks")->capture_default_str();

    const std::pair<const char*, Command> commands[] = {
        {"validate", Command::validate},
        {"solve", Command::solve},
        {"decompose", Command::decompose},
        {"verify", Command::verify},
        {"report", Command::report},
    };
    const char* help[] = {
        "Parse the config and build every ring, bimodule and map",
        "Run solve tasks",
        "Run decompose and diagnostics tasks",
        "Run verify-* tasks",
        "Run every task",
    };
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        auto* sub = app.add_subcommand(commands[i].first, help[i]);
        // Global flags are accepted after the subcommand as well.
        sub->fallthrough();
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_config_error;
    }
    if (bound_opt->count() > 0) flags.bound = bound;

    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed()) return run(commands[i].second, config, flags, std::cerr);
    return exit_config_error;
}
