#pragma once

#include <string>
#include <vector>

#include "loopfinder/subst.hpp"
#include "loopfinder/term.hpp"

namespace loopfinder {

/// Rewrite rule over plain symbols: lhs not a variable, Var(rhs) in Var(lhs).
struct Rule {
    Term lhs;
    Term rhs;

    bool operator==(const Rule& other) const { return lhs == other.lhs && rhs == other.rhs; }
};

/// Rule between tuple-rooted terms. Unfolding can introduce right-hand-side
/// variables that do not occur on the left, so no variable-inclusion
/// condition is imposed here.
struct FRule {
    Term lhs;
    Term rhs;

    bool operator==(const FRule& other) const { return lhs == other.lhs && rhs == other.rhs; }
};

int compare_rules(const FRule& a, const FRule& b);
struct FRuleLess {
    bool operator()(const FRule& a, const FRule& b) const { return compare_rules(a, b) < 0; }
};

bool is_frule(const FRule& r);  // both sides tuple-rooted applications

/// Mark the roots of both sides of a plain rule (f -> f#).
FRule mark_rule(const Rule& r);

FRule apply_subst(const FRule& r, const Substitution& s);

/// Variant of r with every variable replaced by a fresh one from the supply.
FRule rename_apart(const FRule& r, VarSupply& supply);
Rule rename_apart(const Rule& r, VarSupply& supply);

std::vector<VarId> rule_vars(const FRule& r);  // first-occurrence order, lhs then rhs
VarId max_var_id(const FRule& r);

/// Variables renamed to 0,1,2,... in order of first occurrence (lhs first).
/// Two rules are variants iff their canonical forms are equal.
FRule canonical_rule(const FRule& r);

bool is_variant(const FRule& a, const FRule& b);

std::string rule_to_string(const FRule& r, const VarNames* names = nullptr);
std::string rule_to_string(const Rule& r, const VarNames* names = nullptr);

}  // namespace loopfinder
