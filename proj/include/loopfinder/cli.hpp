#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "loopfinder/prover.hpp"

namespace loopfinder::cli {

enum class OutputFormat { Plain, Json };

struct RunConfig {
    std::string input_path;  // .trs file or a directory of them
    Strategy strategy = Strategy::LeftmostNonEmpty;
    double timeout_seconds = 120.0;
    std::uint64_t max_iterations = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_generated = 10'000'000;
    int max_cycles = 5000;
    int max_cycle_len = 16;
    int verify_depth = 25;
    std::uint64_t verify_nodes = 200'000;
    OutputFormat format = OutputFormat::Plain;
    WitnessTest test = WitnessTest::SemiUnify;
    bool dump_graph = false;
    bool verbose = false;
};

/// Exit codes: 0 loop found (NO), 1 DON'T KNOW, 2 TIMEOUT, 3 input error.
/// A directory run analyzes every .trs file under the path and exits 0
/// unless some file failed to parse.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace loopfinder::cli
