#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tml/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "tml - an interpreter for a small ML with topological collections "
        "and rule-based transformations"};

    std::string file;
    std::string strategy = "priority";
    std::uint64_t seed = 0;
    long long max_steps = 100000;
    bool type_only = false;

    app.add_option("file", file,
                   "program to run (.tml); omit to start the REPL");
    app.add_option("--strategy", strategy,
                   "rule application strategy: priority or random")
        ->check(CLI::IsMember({"priority", "random"}));
    app.add_option("--seed", seed, "seed for the random strategy");
    app.add_option("--max-steps", max_steps,
                   "iteration budget for fixpoint");
    app.add_flag("--type-only", type_only,
                 "print inferred types without evaluating");

    CLI11_PARSE(app, argc, argv);

    tml::CliOptions opts;
    opts.strategy = strategy == "random" ? tml::Strategy::random(seed)
                                         : tml::Strategy::priority();
    opts.max_steps = max_steps;
    opts.type_only = type_only;

    if (file.empty()) return tml::repl(std::cin, std::cout, std::cerr, opts);
    if (type_only) return tml::cmd_type(file, std::cout, std::cerr);
    return tml::cmd_run(file, opts, std::cout, std::cerr);
}
