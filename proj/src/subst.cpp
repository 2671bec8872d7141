#include "loopfinder/subst.hpp"

#include <sstream>
#include <unordered_map>
#include <vector>

namespace loopfinder {

const Term* Substitution::lookup(VarId v) const {
    auto it = bind_.find(v);
    return it == bind_.end() ? nullptr : &it->second;
}

void Substitution::bind(VarId v, Term t) {
    if (t.is_var() && t.var_id() == v)
        return;
    bind_.insert_or_assign(v, std::move(t));
}

Term Substitution::apply(const Term& t) const {
    if (bind_.empty())
        return t;
    if (t.is_var()) {
        const Term* b = lookup(t.var_id());
        return b ? *b : t;
    }
    bool changed = false;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) {
        Term na = apply(a);
        if (na != a)
            changed = true;
        args.push_back(std::move(na));
    }
    if (!changed)
        return t;
    return Term::app(t.sym(), std::move(args));
}

Substitution Substitution::compose(const Substitution& other) const {
    Substitution out;
    for (const auto& [v, t] : bind_)
        out.bind(v, other.apply(t));
    for (const auto& [v, t] : other.bind_)
        if (!bind_.count(v))
            out.bind(v, t);
    return out;
}

std::string subst_to_string(const Substitution& s, const VarNames* names) {
    if (s.is_identity())
        return "id";
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [v, t] : s) {
        if (!first)
            os << ", ";
        first = false;
        os << (names ? names->name_of(v) : "v" + std::to_string(v)) << '/'
           << term_to_string(t, names);
    }
    os << '}';
    return os.str();
}

void VarSupply::reserve_up_to(VarId id) {
    if (id >= next_)
        next_ = id + 1;
}

namespace {

// Triangular binding store for unification: variables resolve through chains.
using BindMap = std::unordered_map<VarId, Term>;

Term walk(Term t, const BindMap& bind) {
    while (t.is_var()) {
        auto it = bind.find(t.var_id());
        if (it == bind.end())
            return t;
        t = it->second;
    }
    return t;
}

bool occurs_walked(VarId v, const Term& t, const BindMap& bind) {
    Term w = walk(t, bind);
    if (w.is_var())
        return w.var_id() == v;
    for (const Term& a : w.args())
        if (occurs_walked(v, a, bind))
            return true;
    return false;
}

bool unify_rec(const Term& a, const Term& b, BindMap& bind) {
    Term x = walk(a, bind);
    Term y = walk(b, bind);
    if (x.is_var() && y.is_var() && x.var_id() == y.var_id())
        return true;
    if (x.is_var()) {
        if (occurs_walked(x.var_id(), y, bind))
            return false;
        bind.emplace(x.var_id(), y);
        return true;
    }
    if (y.is_var()) {
        if (occurs_walked(y.var_id(), x, bind))
            return false;
        bind.emplace(y.var_id(), x);
        return true;
    }
    if (!(x.sym() == y.sym()))
        return false;
    for (std::size_t i = 0; i < x.args().size(); ++i)
        if (!unify_rec(x.args()[i], y.args()[i], bind))
            return false;
    return true;
}

Term resolve_full(const Term& t, const BindMap& bind) {
    Term w = walk(t, bind);
    if (w.is_var())
        return w;
    std::vector<Term> args;
    args.reserve(w.args().size());
    for (const Term& a : w.args())
        args.push_back(resolve_full(a, bind));
    return Term::app(w.sym(), std::move(args));
}

}  // namespace

std::optional<Substitution> mgu(const Term& s, const Term& t) {
    BindMap bind;
    if (!unify_rec(s, t, bind))
        return std::nullopt;
    Substitution out;
    for (const auto& [v, _] : bind)
        out.bind(v, resolve_full(Term::var(v), bind));
    return out;
}

namespace {

// Identity bindings are kept here so repeated occurrences stay consistent;
// they are dropped only from the final substitution.
bool match_rec(const Term& l, const Term& t, std::map<VarId, Term>& seen) {
    if (l.is_var()) {
        auto [it, inserted] = seen.emplace(l.var_id(), t);
        return inserted || it->second == t;
    }
    if (t.is_var())
        return false;
    if (!(l.sym() == t.sym()))
        return false;
    for (std::size_t i = 0; i < l.args().size(); ++i)
        if (!match_rec(l.args()[i], t.args()[i], seen))
            return false;
    return true;
}

}  // namespace

std::optional<Substitution> match(const Term& l, const Term& t) {
    std::map<VarId, Term> seen;
    if (!match_rec(l, t, seen))
        return std::nullopt;
    Substitution out;
    for (const auto& [v, b] : seen)
        out.bind(v, b);
    return out;
}

}  // namespace loopfinder
