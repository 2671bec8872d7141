#include "loopfinder/rule.hpp"

#include <algorithm>

namespace loopfinder {

int compare_rules(const FRule& a, const FRule& b) {
    int c = compare_terms(a.lhs, b.lhs);
    if (c != 0)
        return c;
    return compare_terms(a.rhs, b.rhs);
}

bool is_frule(const FRule& r) {
    return r.lhs.is_app() && r.lhs.sym().kind == SymbolKind::Tuple && r.rhs.is_app() &&
           r.rhs.sym().kind == SymbolKind::Tuple;
}

FRule mark_rule(const Rule& r) {
    auto mark_root = [](const Term& t) {
        std::vector<Term> args(t.args().begin(), t.args().end());
        return Term::app(marked(t.sym()), std::move(args));
    };
    return FRule{mark_root(r.lhs), mark_root(r.rhs)};
}

FRule apply_subst(const FRule& r, const Substitution& s) {
    return FRule{s.apply(r.lhs), s.apply(r.rhs)};
}

std::vector<VarId> rule_vars(const FRule& r) {
    std::vector<VarId> vars = term_vars(r.lhs);
    for (VarId v : term_vars(r.rhs))
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    return vars;
}

VarId max_var_id(const FRule& r) {
    return std::max(max_var_id(r.lhs), max_var_id(r.rhs));
}

FRule rename_apart(const FRule& r, VarSupply& supply) {
    Substitution ren;
    for (VarId v : rule_vars(r))
        ren.bind(v, supply.fresh_var());
    return apply_subst(r, ren);
}

Rule rename_apart(const Rule& r, VarSupply& supply) {
    Substitution ren;
    for (VarId v : term_vars(r.lhs))
        ren.bind(v, supply.fresh_var());
    return Rule{ren.apply(r.lhs), ren.apply(r.rhs)};
}

FRule canonical_rule(const FRule& r) {
    Substitution ren;
    VarId next = 0;
    for (VarId v : rule_vars(r))
        ren.bind(v, Term::var(next++));
    return apply_subst(r, ren);
}

bool is_variant(const FRule& a, const FRule& b) {
    return canonical_rule(a) == canonical_rule(b);
}

std::string rule_to_string(const FRule& r, const VarNames* names) {
    return term_to_string(r.lhs, names) + " -> " + term_to_string(r.rhs, names);
}

std::string rule_to_string(const Rule& r, const VarNames* names) {
    return term_to_string(r.lhs, names) + " -> " + term_to_string(r.rhs, names);
}

}  // namespace loopfinder
