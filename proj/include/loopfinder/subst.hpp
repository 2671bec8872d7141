#pragma once

#include <map>
#include <optional>
#include <string>

#include "loopfinder/term.hpp"

namespace loopfinder {

/// Finite map from variables to terms. Identity bindings are never stored,
/// so the empty substitution is the identity.
class Substitution {
public:
    static Substitution identity() { return {}; }

    bool is_identity() const { return bind_.empty(); }
    std::size_t size() const { return bind_.size(); }

    const Term* lookup(VarId v) const;
    void bind(VarId v, Term t);  // drops x -> x

    Term apply(const Term& t) const;

    /// this, then other: t.apply(compose(a,b)) == b.apply(a.apply(t)).
    Substitution compose(const Substitution& other) const;

    auto begin() const { return bind_.begin(); }
    auto end() const { return bind_.end(); }

    bool operator==(const Substitution& other) const { return bind_ == other.bind_; }

private:
    std::map<VarId, Term> bind_;
};

std::string subst_to_string(const Substitution& s, const VarNames* names = nullptr);

/// Monotone source of variable identifiers never issued before. Seed it above
/// every identifier already in play.
class VarSupply {
public:
    explicit VarSupply(VarId first = 0) : next_(first) {}

    VarId fresh() { return next_++; }
    Term fresh_var() { return Term::var(fresh()); }
    VarId next_id() const { return next_; }

    /// Bump the counter so that id and everything below is never issued.
    void reserve_up_to(VarId id);

private:
    VarId next_;
};

/// Most general unifier of s and t (idempotent, with occurs check), or
/// nothing when the terms do not unify.
std::optional<Substitution> mgu(const Term& s, const Term& t);

/// Substitution theta with l.theta = t, unique on Var(l), or nothing.
/// Variables of t are treated as constants.
std::optional<Substitution> match(const Term& l, const Term& t);

}  // namespace loopfinder
