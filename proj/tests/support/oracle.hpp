#pragma once

// Independent oracles for property tests. Everything here is implemented
// from scratch against the plain definitions, on purpose: these functions
// must not share code paths with the library they check.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "loopfinder/term.hpp"

namespace testsupport {

using namespace loopfinder;

using VarMap = std::map<VarId, Term>;

inline Term naive_apply(const Term& t, const VarMap& m) {
    if (t.is_var()) {
        auto it = m.find(t.var_id());
        return it == m.end() ? t : it->second;
    }
    std::vector<Term> args;
    for (const Term& a : t.args())
        args.push_back(naive_apply(a, m));
    return Term::app(t.sym(), std::move(args));
}

inline bool naive_match(const Term& l, const Term& t, VarMap& binding) {
    if (l.is_var()) {
        auto it = binding.find(l.var_id());
        if (it == binding.end()) {
            binding.emplace(l.var_id(), t);
            return true;
        }
        return it->second == t;
    }
    if (t.is_var() || !(l.sym() == t.sym()))
        return false;
    for (std::size_t i = 0; i < l.args().size(); ++i)
        if (!naive_match(l.args()[i], t.args()[i], binding))
            return false;
    return true;
}

inline bool naive_matches(const Term& l, const Term& t) {
    VarMap binding;
    return naive_match(l, t, binding);
}

/// All terms of the given maximum depth over the signature and variables;
/// depth 0 terms are the variables and the constants.
inline std::vector<Term> term_pool(const std::vector<Symbol>& signature,
                                   const std::vector<VarId>& vars, int max_depth) {
    std::vector<Term> current;
    for (VarId v : vars)
        current.push_back(Term::var(v));
    for (const Symbol& s : signature)
        if (s.arity == 0)
            current.push_back(Term::app(s));
    std::vector<Term> pool = current;
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<Term> next = pool;  // everything of depth < d stays usable
        for (const Symbol& s : signature) {
            if (s.arity == 1) {
                for (const Term& a : pool)
                    next.push_back(Term::app(s, {a}));
            } else if (s.arity == 2) {
                for (const Term& a : pool)
                    for (const Term& b : pool)
                        next.push_back(Term::app(s, {a, b}));
            }
        }
        pool = std::move(next);
    }
    return pool;
}

/// Brute-force semi-unifiability: enumerate the first substitution over the
/// pool; the second one exists iff the instantiated left side matches the
/// instantiated right side.
inline bool oracle_semi_unifiable(const Term& s, const Term& t, const std::vector<Term>& pool) {
    std::vector<VarId> vars = term_vars(s);
    for (VarId v : term_vars(t))
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    std::size_t n = vars.size();
    std::vector<std::size_t> choice(n, 0);
    while (true) {
        VarMap theta1;
        for (std::size_t i = 0; i < n; ++i)
            theta1.emplace(vars[i], pool[choice[i]]);
        if (naive_matches(naive_apply(s, theta1), naive_apply(t, theta1)))
            return true;
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++choice[i] < pool.size())
                break;
            choice[i] = 0;
        }
        if (i == n)
            return false;
        if (n == 0)
            return false;
    }
}

/// All unifiers of s and t with images drawn from the pool.
inline std::vector<VarMap> oracle_unifiers(const Term& s, const Term& t,
                                           const std::vector<Term>& pool) {
    std::vector<VarId> vars = term_vars(s);
    for (VarId v : term_vars(t))
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    std::vector<VarMap> out;
    std::size_t n = vars.size();
    std::vector<std::size_t> choice(n, 0);
    while (true) {
        VarMap sigma;
        for (std::size_t i = 0; i < n; ++i)
            sigma.emplace(vars[i], pool[choice[i]]);
        if (naive_apply(s, sigma) == naive_apply(t, sigma))
            out.push_back(sigma);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++choice[i] < pool.size())
                break;
            choice[i] = 0;
        }
        if (i == n || n == 0)
            return out;
    }
}

struct TermGen {
    std::mt19937_64 rng;
    std::vector<Symbol> signature;
    std::vector<VarId> vars;

    explicit TermGen(std::uint64_t seed) : rng(seed) {
        signature = {Symbol{"f", 2, SymbolKind::Plain}, Symbol{"g", 1, SymbolKind::Plain},
                     Symbol{"a", 0, SymbolKind::Plain}};
        vars = {0, 1};
    }

    Term term(int max_depth) {
        if (max_depth == 0 || pick(3) == 0) {
            std::size_t leaves = vars.size() + 1;
            std::size_t c = pick(leaves);
            if (c < vars.size())
                return Term::var(vars[c]);
            return Term::app(signature[2]);
        }
        if (pick(2) == 0)
            return Term::app(signature[1], {term(max_depth - 1)});
        return Term::app(signature[0], {term(max_depth - 1), term(max_depth - 1)});
    }

    std::size_t pick(std::size_t n) { return rng() % n; }
};

}  // namespace testsupport
