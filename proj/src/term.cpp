#include "loopfinder/term.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace loopfinder {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t symbol_hash(const Symbol& s) {
    std::size_t h = std::hash<std::string>{}(s.name);
    h = hash_combine(h, static_cast<std::size_t>(s.arity));
    h = hash_combine(h, s.kind == SymbolKind::Tuple ? 2u : 1u);
    return h;
}

}  // namespace

bool Symbol::operator<(const Symbol& other) const {
    if (kind != other.kind)
        return kind < other.kind;
    if (name != other.name)
        return name < other.name;
    return arity < other.arity;
}

std::string Symbol::display() const {
    return kind == SymbolKind::Tuple ? name + "#" : name;
}

Symbol marked(const Symbol& s) {
    if (s.kind == SymbolKind::Tuple)
        throw std::logic_error("marked: symbol '" + s.name + "' is already a tuple symbol");
    return Symbol{s.name, s.arity, SymbolKind::Tuple};
}

Symbol unmarked(const Symbol& s) {
    if (s.kind == SymbolKind::Plain)
        throw std::logic_error("unmarked: symbol '" + s.name + "' is not a tuple symbol");
    return Symbol{s.name, s.arity, SymbolKind::Plain};
}

Term Term::var(VarId id) {
    Term t;
    auto node = std::make_shared<Node>();
    node->is_var = true;
    node->var = id;
    node->hash = hash_combine(0x56e98c7a, std::hash<VarId>{}(id));
    node->size = 1;
    t.node_ = std::move(node);
    return t;
}

Term Term::app(Symbol sym, std::vector<Term> args) {
    if (static_cast<int>(args.size()) != sym.arity)
        throw std::logic_error("Term::app: arity mismatch for symbol '" + sym.name + "'");
    Term t;
    auto node = std::make_shared<Node>();
    node->is_var = false;
    node->var = 0;
    std::size_t h = symbol_hash(sym);
    std::size_t sz = 1;
    for (const Term& a : args) {
        h = hash_combine(h, a.hash());
        sz += a.size();
    }
    node->symbol = std::move(sym);
    node->children = std::move(args);
    node->hash = h;
    node->size = sz;
    t.node_ = std::move(node);
    return t;
}

VarId Term::var_id() const {
    if (!node_->is_var)
        throw std::logic_error("Term::var_id called on an application");
    return node_->var;
}

const Symbol& Term::sym() const {
    if (node_->is_var)
        throw std::logic_error("Term::sym called on a variable");
    return node_->symbol;
}

std::span<const Term> Term::args() const {
    if (node_->is_var)
        return {};
    return node_->children;
}

bool Term::operator==(const Term& other) const {
    if (node_ == other.node_)
        return true;
    if (node_->hash != other.node_->hash || node_->is_var != other.node_->is_var)
        return false;
    if (node_->is_var)
        return node_->var == other.node_->var;
    if (!(node_->symbol == other.node_->symbol))
        return false;
    for (std::size_t i = 0; i < node_->children.size(); ++i)
        if (node_->children[i] != other.node_->children[i])
            return false;
    return true;
}

int compare_terms(const Term& a, const Term& b) {
    if (a.is_var() != b.is_var())
        return a.is_var() ? -1 : 1;
    if (a.is_var()) {
        if (a.var_id() != b.var_id())
            return a.var_id() < b.var_id() ? -1 : 1;
        return 0;
    }
    const Symbol& sa = a.sym();
    const Symbol& sb = b.sym();
    if (!(sa == sb))
        return sa < sb ? -1 : 1;
    for (int i = 0; i < sa.arity; ++i) {
        int c = compare_terms(a.args()[i], b.args()[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

Position Position::child(int i) const {
    Position p = *this;
    p.steps.push_back(i);
    return p;
}

bool Position::is_prefix_of(const Position& other) const {
    if (steps.size() > other.steps.size())
        return false;
    return std::equal(steps.begin(), steps.end(), other.steps.begin());
}

std::string position_to_string(const Position& p) {
    if (p.is_root())
        return "ε";
    std::string out;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (i > 0)
            out += '.';
        out += std::to_string(p.steps[i]);
    }
    return out;
}

namespace {

void collect_positions(const Term& t, Position& cur, std::vector<Position>& out) {
    out.push_back(cur);
    if (t.is_var())
        return;
    int i = 1;
    for (const Term& a : t.args()) {
        cur.steps.push_back(i++);
        collect_positions(a, cur, out);
        cur.steps.pop_back();
    }
}

const Term* descend(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (int step : p.steps) {
        if (cur->is_var() || step < 1 || step > static_cast<int>(cur->args().size()))
            return nullptr;
        cur = &cur->args()[static_cast<std::size_t>(step - 1)];
    }
    return cur;
}

}  // namespace

std::vector<Position> positions(const Term& t) {
    std::vector<Position> out;
    Position cur;
    collect_positions(t, cur, out);
    return out;
}

bool has_position(const Term& t, const Position& p) {
    return descend(t, p) != nullptr;
}

Term subterm_at(const Term& t, const Position& p) {
    const Term* sub = descend(t, p);
    if (!sub)
        throw std::out_of_range("subterm_at: position " + position_to_string(p) + " not in term");
    return *sub;
}

Term replace_at(const Term& t, const Position& p, const Term& s) {
    if (p.is_root())
        return s;
    if (t.is_var() || p.steps.front() < 1 || p.steps.front() > static_cast<int>(t.args().size()))
        throw std::out_of_range("replace_at: position " + position_to_string(p) + " not in term");
    std::vector<Term> args(t.args().begin(), t.args().end());
    Position rest;
    rest.steps.assign(p.steps.begin() + 1, p.steps.end());
    std::size_t i = static_cast<std::size_t>(p.steps.front() - 1);
    args[i] = replace_at(args[i], rest, s);
    return Term::app(t.sym(), std::move(args));
}

namespace {

// Roots agree when both sides are variables (shared bottom root) or both are
// applications of the same symbol.
bool roots_agree(const Term& a, const Term& b) {
    if (a.is_var() || b.is_var())
        return a.is_var() && b.is_var();
    return a.sym() == b.sym();
}

void collect_dpos(const Term& s, const Term& t, Position& cur, std::vector<Position>& out) {
    if (!roots_agree(s, t)) {
        out.push_back(cur);
        return;
    }
    if (s.is_var())
        return;
    for (std::size_t i = 0; i < s.args().size(); ++i) {
        cur.steps.push_back(static_cast<int>(i + 1));
        collect_dpos(s.args()[i], t.args()[i], cur, out);
        cur.steps.pop_back();
    }
}

}  // namespace

std::vector<Position> dpos(const Term& s, const Term& t) {
    std::vector<Position> out;
    Position cur;
    collect_dpos(s, t, cur, out);
    return out;
}

std::vector<Position> npos(const Term& t, const Position& p) {
    if (!has_position(t, p))
        throw std::out_of_range("npos: position " + position_to_string(p) + " not in term");
    std::vector<Position> out;
    for (const Position& q : positions(t)) {
        if (!(q.is_prefix_of(p) || p.is_prefix_of(q)))
            continue;
        if (subterm_at(t, q).is_var())
            continue;
        out.push_back(q);
    }
    return out;
}

namespace {

void collect_vars(const Term& t, std::vector<VarId>& order, std::unordered_map<VarId, bool>& seen) {
    if (t.is_var()) {
        if (!seen.count(t.var_id())) {
            seen[t.var_id()] = true;
            order.push_back(t.var_id());
        }
        return;
    }
    for (const Term& a : t.args())
        collect_vars(a, order, seen);
}

}  // namespace

std::vector<VarId> term_vars(const Term& t) {
    std::vector<VarId> order;
    std::unordered_map<VarId, bool> seen;
    collect_vars(t, order, seen);
    return order;
}

bool occurs(VarId v, const Term& t) {
    if (t.is_var())
        return t.var_id() == v;
    for (const Term& a : t.args())
        if (occurs(v, a))
            return true;
    return false;
}

VarId max_var_id(const Term& t) {
    VarId m = 0;
    for (VarId v : term_vars(t))
        m = std::max(m, v);
    return m;
}

std::string VarNames::name_of(VarId id) const {
    auto it = names.find(id);
    if (it != names.end())
        return it->second;
    return "v" + std::to_string(id);
}

namespace {

void print_term(std::ostream& os, const Term& t, const VarNames* names) {
    if (t.is_var()) {
        if (names)
            os << names->name_of(t.var_id());
        else
            os << "v" << t.var_id();
        return;
    }
    os << t.sym().display();
    if (!t.args().empty()) {
        os << '(';
        bool first = true;
        for (const Term& a : t.args()) {
            if (!first)
                os << ',';
            first = false;
            print_term(os, a, names);
        }
        os << ')';
    }
}

}  // namespace

std::string term_to_string(const Term& t, const VarNames* names) {
    std::ostringstream os;
    print_term(os, t, names);
    return os.str();
}

}  // namespace loopfinder
