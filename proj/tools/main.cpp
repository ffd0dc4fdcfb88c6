#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "splitoct/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"splitoct: exact split-octonion kernel, Rota-Baxter operator "
                 "verification and search"};
    app.require_subcommand(1);

    splitoct::RunConfig cfg;
    const char* commands[] = {
        "verify-algebra",      "verify-morphisms", "verify-operators",
        "verify-decompositions", "isotropic-audit", "search-kernel",
        "verify-theorem1",     "orbit-equiv",      "group-closure",
    };
    for (const char* name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--field", cfg.field, "ground field: Q, F2, F3, F5 or Fp:<p>");
        sub->add_option("--weight", cfg.weight, "operator weight (scalar string)");
        sub->add_option("--budget", cfg.budget, "node cap for searches");
        sub->add_option("--closure-cap", cfg.closure_cap, "element cap for group closures");
        sub->add_option("--threads", cfg.threads, "worker threads (reports do not depend on it)");
        sub->add_option("--seed", cfg.seed, "seed for randomized property suites");
        sub->add_option("--output", cfg.output, "write the JSON report here instead of stdout");
        sub->add_option("--random-pairs", cfg.random_pairs, "sample count for randomized checks");
        sub->add_flag("--timing", cfg.timing, "include wall_ms in the report");
        if (std::string(name) == "search-kernel")
            sub->add_option("--kernel", cfg.kernel, "prescribed kernel: K4, K3a or K3b");
        if (std::string(name) == "orbit-equiv")
            sub->add_option("files", cfg.files, "two operator JSON files")->expected(2);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    const splitoct::RunResult result = splitoct::run(cfg);

    if (cfg.output.empty()) {
        std::cout << result.report;
    } else {
        std::ofstream out(cfg.output);
        if (!out) {
            std::cerr << "error: cannot write '" << cfg.output << "'\n";
            return 2;
        }
        out << result.report;
    }
    std::cerr << result.summary;
    return result.exit_code;
}
