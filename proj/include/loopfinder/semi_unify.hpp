#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "loopfinder/subst.hpp"
#include "loopfinder/term.hpp"

namespace loopfinder {

/// Telemetry for the semi-unification solver, mainly for test builds.
struct SemiStats {
    std::uint64_t ops = 0;
    bool overflowed = false;         // op budget exhausted before a fixpoint
    bool extraction_failed = false;  // solved form did not yield witnesses
};

/// Decides whether s semi-unifies with t, i.e. whether there are
/// substitutions theta1, theta2 with s.theta1.theta2 = t.theta1, and returns
/// such a witness pair. theta2 is recovered by matching s.theta1 against
/// t.theta1. Every returned pair satisfies the equation syntactically (this
/// is re-checked before returning).
std::optional<std::pair<Substitution, Substitution>> semi_unify(const Term& s, const Term& t,
                                                                SemiStats* stats = nullptr);

}  // namespace loopfinder
