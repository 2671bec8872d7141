#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopfinder/subst.hpp"
#include "loopfinder/trs.hpp"

namespace loopfinder {

struct VerifyBounds {
    int max_depth = 25;
    std::uint64_t max_nodes = 200'000;
};

/// A rewrite derivation from start whose final term contains an instance of
/// start: final|closing_pos = start . closing_subst. Steps are one-step
/// rewrites of their predecessor and there is at least one.
struct RewriteTrace {
    Term start;
    std::vector<RewriteStep> steps;
    Position closing_pos;
    Substitution closing_subst;
};

/// Breadth-first search for a derivation u ->+ C[u.theta]; the first term
/// reached that embeds an instance of u closes the trace. Returns nothing if
/// the bounds run out first.
std::optional<RewriteTrace> verify_loop(const Trs& R, const Term& u, const VerifyBounds& bounds);

/// Re-validates a trace step by step against the rewriting engine, including
/// the closing condition.
bool replay_trace(const Trs& R, const RewriteTrace& trace);

std::string trace_to_string(const RewriteTrace& trace, const VarNames* names = nullptr);

}  // namespace loopfinder
