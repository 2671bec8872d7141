#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "loopfinder/rule.hpp"
#include "loopfinder/term.hpp"

namespace loopfinder {

struct ParseError {
    int line = 0;
    int col = 0;
    std::string message;

    std::string to_string() const;
};

/// Term rewriting system: ordered rules plus the signature they use.
/// Variable identifiers are file-scoped; display names live in var_names.
struct Trs {
    std::vector<Rule> rules;
    std::set<Symbol> signature;
    VarNames var_names;
    VarId first_free_var = 0;  // seed for fresh-variable supplies
};

struct ParseOutcome {
    std::optional<Trs> trs;
    std::vector<ParseError> errors;

    bool ok() const { return trs.has_value(); }
};

/// Parses the parenthesized TRS format: (VAR x y ...), (RULES l -> r ...),
/// (COMMENT ...). A (STRATEGY FULL) section is accepted and ignored; any
/// other section, relative rules (->=) and arity-inconsistent symbols are
/// errors. Rules must satisfy lhs not a variable and Var(rhs) in Var(lhs).
ParseOutcome parse_trs(std::string_view text);

/// Prints R in the same format parse_trs accepts (round-trips modulo
/// variable display names).
std::string print_trs(const Trs& R);

/// Root symbols of left-hand sides.
std::set<Symbol> defined_symbols(const Trs& R);

/// Marked rules l# -> t# for every defined-root subterm t of a rule's rhs,
/// deduplicated modulo renaming, in rule order then position order.
std::vector<FRule> dependency_pairs(const Trs& R);

struct RewriteStep {
    Position pos;
    int rule_index = 0;  // 0-based into R.rules
    Term result;
};

/// All one-step rewrites of t, ordered by position (lexicographic) then rule
/// index.
std::vector<RewriteStep> successors(const Term& t, const Trs& R);

}  // namespace loopfinder
