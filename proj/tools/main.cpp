#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "loopfinder/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"loopfinder - loop detection for first-order term rewrite systems"};

    loopfinder::cli::RunConfig config;
    std::string strategy = "lmne";
    std::string format = "plain";
    std::string test = "semi";
    std::uint64_t max_iterations = 0;

    app.add_option("input", config.input_path, "a .trs file or a directory of .trs files")
        ->required();
    app.add_option("--strategy", strategy, "disagreement selection: all, lm or lmne")
        ->check(CLI::IsMember({"all", "lm", "lmne"}))
        ->capture_default_str();
    app.add_option("--timeout", config.timeout_seconds, "wall-clock budget per proof, seconds")
        ->capture_default_str();
    app.add_option("--max-iterations", max_iterations,
                   "unfolding iteration budget, 0 for unlimited")
        ->capture_default_str();
    app.add_option("--max-cycles", config.max_cycles, "cap on enumerated simple cycles")
        ->capture_default_str();
    app.add_option("--max-cycle-len", config.max_cycle_len, "cap on simple cycle length")
        ->capture_default_str();
    app.add_option("--verify-depth", config.verify_depth,
                   "rewrite depth for certificate verification")
        ->capture_default_str();
    app.add_option("--format", format, "output format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();
    app.add_option("--criterion", test,
                   "witness test on compressed rules: semi, match or unify")
        ->check(CLI::IsMember({"semi", "match", "unify"}))
        ->capture_default_str();
    app.add_flag("--dump-graph", config.dump_graph, "print the estimated dependency graph");
    app.add_flag("--verbose", config.verbose, "log every unfolding step to stderr");

    CLI11_PARSE(app, argc, argv);

    if (strategy == "all")
        config.strategy = loopfinder::Strategy::All;
    else if (strategy == "lm")
        config.strategy = loopfinder::Strategy::Leftmost;
    else
        config.strategy = loopfinder::Strategy::LeftmostNonEmpty;
    config.format = format == "json" ? loopfinder::cli::OutputFormat::Json
                                     : loopfinder::cli::OutputFormat::Plain;
    if (test == "match")
        config.test = loopfinder::WitnessTest::MatchOnly;
    else if (test == "unify")
        config.test = loopfinder::WitnessTest::UnifyOnly;
    if (max_iterations > 0)
        config.max_iterations = max_iterations;

    return loopfinder::cli::run(config, std::cout, std::cerr);
}
