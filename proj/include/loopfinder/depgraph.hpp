#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "loopfinder/rule.hpp"
#include "loopfinder/trs.hpp"

namespace loopfinder {

/// Replaces every outermost subterm whose root is a defined symbol by a
/// distinct fresh variable. Variables are kept; tuple-rooted applications
/// recurse (tuple symbols are never defined).
Term cap(const Term& t, const std::set<Symbol>& defined, VarSupply& supply);

/// Replaces every variable occurrence by a distinct fresh variable.
Term ren(const Term& t, VarSupply& supply);

/// True iff ren(cap(rhs(a))) unifies with lhs(b). Fresh variables are drawn
/// above everything in a and b, which also renames the rules apart.
bool connectable(const FRule& a, const FRule& b, const std::set<Symbol>& defined);

/// Estimated dependency graph: nodes are dependency pairs, an arc (i, j)
/// means node i is connectable to node j.
struct DepGraph {
    std::vector<FRule> nodes;
    std::vector<std::vector<bool>> arcs;  // arcs[i][j]

    bool has_arc(int i, int j) const { return arcs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    std::string edge_list() const;  // one "i -> j" line per arc
};

DepGraph build_graph(const Trs& R);

/// Strongly connected components that contain at least one arc (a singleton
/// qualifies only with a self-arc). Components are sorted by smallest member
/// index; members are sorted ascending.
std::vector<std::vector<int>> sccs(const DepGraph& g);

struct CycleLimits {
    int max_count = 5000;
    int max_len = 16;
};

/// Nonempty sequence of marked rules, each connectable to its cyclic
/// successor, pairwise distinct modulo renaming.
struct SyntacticLoop {
    std::vector<FRule> rules;

    std::size_t size() const { return rules.size(); }
    bool is_singleton() const { return rules.size() == 1; }
};

/// Checks the syntactic-loop conditions: nonempty, every element a marked
/// rule, pairwise distinct modulo renaming, and each rule connectable to its
/// cyclic successor (a singleton must be connectable to itself).
bool is_syntactic_loop(const SyntacticLoop& loop, const std::set<Symbol>& defined);

/// Canonical identification key: loops with the same rules modulo renaming,
/// in any order, get equal keys.
using LoopKey = std::vector<std::pair<Term, Term>>;
LoopKey loop_key(const SyntacticLoop& loop);

struct LoopKeyLess {
    bool operator()(const LoopKey& a, const LoopKey& b) const;
};
using LoopKeySet = std::set<LoopKey, LoopKeyLess>;

std::string loop_to_string(const SyntacticLoop& loop, const VarNames* names = nullptr);

/// Simple cycles of one component, shortest first, then lexicographically by
/// node indices, truncated by the limits. Each cycle's rules are renamed
/// pairwise variable-disjoint from the supply.
std::vector<SyntacticLoop> simple_cycles(const DepGraph& g, const std::vector<int>& component,
                                         const CycleLimits& limits, VarSupply& supply);

/// Simple cycles of the whole graph (union over retained components).
std::vector<SyntacticLoop> simple_cycles(const DepGraph& g, const CycleLimits& limits,
                                         VarSupply& supply);

}  // namespace loopfinder
