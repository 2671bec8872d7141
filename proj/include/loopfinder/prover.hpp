#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "loopfinder/depgraph.hpp"
#include "loopfinder/semi_unify.hpp"
#include "loopfinder/unfold.hpp"
#include "loopfinder/verify.hpp"

namespace loopfinder {

/// Which witness test runs on compressed singletons. Semi-unification is the
/// full criterion; the restrictions exist for experiments on whether it buys
/// anything over plain matching or unification.
enum class WitnessTest { SemiUnify, MatchOnly, UnifyOnly };

/// Proof that the unmarked left-hand side of the compressed rule loops:
/// s.theta1.theta2 = t.theta1, so s.theta1 rewrites to a term containing an
/// instance of itself.
struct LoopWitness {
    FRule compressed;  // the singleton rule s# -> t#
    Substitution theta1;
    Substitution theta2;
    Term witness_term;  // s.theta1 over plain symbols
    std::optional<RewriteTrace> trace;
};

enum class VerdictKind { No, DontKnow, Timeout };

std::string verdict_token(VerdictKind k);  // "NO", "DON'T KNOW", "TIMEOUT"

struct ProverStats {
    std::uint64_t iterations = 0;
    std::uint64_t generated = 0;
    std::chrono::milliseconds elapsed{0};
};

struct Verdict {
    VerdictKind kind = VerdictKind::DontKnow;
    std::optional<LoopWitness> witness;  // present iff kind == No
    ProverStats stats;
};

/// Applies the witness test to the unmarked sides of a singleton loop. On
/// success the witness equation is re-checked by direct substitution before
/// anything is returned.
std::optional<LoopWitness> check_singleton(const SyntacticLoop& loop,
                                           WitnessTest test = WitnessTest::SemiUnify);

struct ProveOptions {
    WitnessTest test = WitnessTest::SemiUnify;
    CycleLimits cycle_limits;
    std::ostream* trace_log = nullptr;  // unfolding trace sink
};

/// Runs the unfolding search and answers NO with a witness as soon as a
/// compressed singleton passes the witness test, DON'T KNOW when no loops
/// remain to unfold, or TIMEOUT when the budget runs out. A NO witness also
/// gets an independent rewrite-trace check; failure of that check keeps the
/// verdict but leaves the trace empty.
Verdict prove(const Trs& R, Strategy strategy, const UnfoldBudget& budget,
              const VerifyBounds& verify_bounds, const ProveOptions& options = {});

}  // namespace loopfinder
