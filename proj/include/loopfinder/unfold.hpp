#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "loopfinder/depgraph.hpp"
#include "loopfinder/trs.hpp"

namespace loopfinder {

/// Which disagreement positions drive the unfolding of a rule pair.
enum class Strategy { All, Leftmost, LeftmostNonEmpty };

std::string strategy_name(Strategy s);

struct UnfoldBudget {
    double wall_seconds = 120.0;
    std::uint64_t max_iterations = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_generated = 10'000'000;
};

/// One unfolding result with its provenance: the non-variable position the
/// step worked at, and the index of the system rule used for narrowing
/// (-1 when the step unified against the guide instead).
struct Unfolded {
    FRule rule;
    Position at;
    int rule_index = -1;
};

/// Forward unfoldings of rule = l -> r at disagreement position p of (r, s),
/// guided by s: instantiations unifying r|q with s|q for prefixes q of p,
/// then forward narrowing of r at every non-variable position around p.
/// Throws std::invalid_argument unless p is a disagreement position of
/// (r, s). Results are deduplicated modulo renaming, in order: unifying
/// steps before narrowing steps, positions ascending, rule index ascending.
std::vector<FRule> forward_unfold(const FRule& rule, const Term& guide, const Position& p,
                                  const Trs& R, VarSupply& supply);
std::vector<Unfolded> forward_unfold_ex(const FRule& rule, const Term& guide, const Position& p,
                                        const Trs& R, VarSupply& supply);

/// Backward unfoldings of rule = s -> t at disagreement position p of (r, s),
/// guided by r: instantiations unifying r|q with s|q for prefixes q of p,
/// then backward narrowing of s at every non-variable position around p.
std::vector<FRule> backward_unfold(const FRule& rule, const Term& guide, const Position& p,
                                   const Trs& R, VarSupply& supply);
std::vector<Unfolded> backward_unfold_ex(const FRule& rule, const Term& guide, const Position& p,
                                         const Trs& R, VarSupply& supply);

/// Positions supplied to the unfolding operators for the adjacent pair
/// (rule1 = l -> r, rule2 = s -> t), out of the disagreement positions of
/// (r, s): all of them, the leftmost, or the leftmost with at least one
/// unfolding.
std::vector<Position> select_positions(Strategy strategy, const FRule& rule1, const FRule& rule2,
                                       const Trs& R, VarSupply& supply);

/// One application of the guided-unfolding transformer to a set of loops:
/// adjacent rules whose interface unifies are merged; otherwise the two
/// operators above rewrite one side of an adjacent pair; singletons are
/// unfolded against themselves. Candidates that are not syntactic loops are
/// dropped; survivors are deduplicated by their identification key.
std::vector<SyntacticLoop> gu_step(const std::vector<SyntacticLoop>& X, const Trs& R,
                                   Strategy strategy, VarSupply& supply);

struct IterationReport {
    std::uint64_t iterations = 0;
    std::uint64_t generated = 0;
    bool frontier_empty = false;
    bool stopped_by_callback = false;
    bool budget_exhausted = false;
};

struct GunfOptions {
    CycleLimits cycle_limits;
    std::ostream* trace = nullptr;
};

/// Return true to stop the search (a witness was accepted).
using LoopCallback = std::function<bool(const SyntacticLoop&)>;

/// Iterates gu_step starting from the simple cycles of R, pruning loops seen
/// before (re-deriving one cannot create new descendants). The callback runs
/// on every singleton as it is produced, including the initial cycles.
IterationReport gunf_iterate(const Trs& R, Strategy strategy, const UnfoldBudget& budget,
                             const LoopCallback& on_loop, VarSupply& supply,
                             const GunfOptions& options = {});

}  // namespace loopfinder
