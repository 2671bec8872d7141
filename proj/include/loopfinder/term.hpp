#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace loopfinder {

using VarId = std::uint64_t;

enum class SymbolKind { Plain, Tuple };

/// Function symbol. Two symbols are equal iff name, arity and kind agree.
/// Tuple symbols are the marked (#) counterparts of plain symbols with the
/// same name and arity; they never occur in parsed rewrite rules.
struct Symbol {
    std::string name;
    int arity = 0;
    SymbolKind kind = SymbolKind::Plain;

    bool operator==(const Symbol& other) const {
        return arity == other.arity && kind == other.kind && name == other.name;
    }
    bool operator<(const Symbol& other) const;

    std::string display() const;  // name, with a trailing '#' for tuple symbols
};

Symbol marked(const Symbol& s);    // plain -> tuple; throws if already marked
Symbol unmarked(const Symbol& s);  // tuple -> plain; throws if not marked

/// First-order term: a variable or an application of a symbol to subterms.
/// Immutable value with structural sharing; copying is cheap.
class Term {
public:
    Term() = default;  // empty handle, only as a placeholder before assignment

    static Term var(VarId id);
    static Term app(Symbol sym, std::vector<Term> args = {});

    bool is_var() const { return node_->is_var; }
    bool is_app() const { return !node_->is_var; }
    VarId var_id() const;
    const Symbol& sym() const;
    std::span<const Term> args() const;

    std::size_t hash() const { return node_->hash; }
    std::size_t size() const { return node_->size; }  // number of nodes

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }

private:
    struct Node {
        bool is_var;
        VarId var;
        Symbol symbol;
        std::vector<Term> children;
        std::size_t hash;
        std::size_t size;
    };
    std::shared_ptr<const Node> node_;
};

/// Total order on terms (variables first, by id; then by symbol and
/// arguments). Used for canonical forms and deterministic containers.
int compare_terms(const Term& a, const Term& b);

struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return compare_terms(a, b) < 0; }
};
struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Position in a term: sequence of 1-based child indices, empty = root.
struct Position {
    std::vector<int> steps;

    Position() = default;
    Position(std::initializer_list<int> s) : steps(s) {}

    static Position root() { return Position{}; }
    bool is_root() const { return steps.empty(); }
    std::size_t depth() const { return steps.size(); }

    Position child(int i) const;
    bool is_prefix_of(const Position& other) const;  // p <= q
    bool operator==(const Position& other) const { return steps == other.steps; }
    bool operator<(const Position& other) const { return steps < other.steps; }  // lexicographic
};

std::string position_to_string(const Position& p);  // "1.2", root prints as the empty-position sign

/// All positions of t in pre-order (equals lexicographic order).
std::vector<Position> positions(const Term& t);

bool has_position(const Term& t, const Position& p);

/// Subterm of t at p. Throws std::out_of_range if p is not a position of t.
Term subterm_at(const Term& t, const Position& p);

/// t with the subterm at p replaced by s. Throws std::out_of_range as above.
Term replace_at(const Term& t, const Position& p, const Term& s);

/// Disagreement positions of s and t: least positions where the root symbols
/// differ (all variables have the same root). Sorted lexicographically; no
/// two results are prefix-related.
std::vector<Position> dpos(const Term& s, const Term& t);

/// Non-variable positions of t that are comparable with p (prefix of p, or
/// having p as a prefix). Throws std::out_of_range if p is not in t.
std::vector<Position> npos(const Term& t, const Position& p);

/// Variables of t in order of first occurrence.
std::vector<VarId> term_vars(const Term& t);
bool occurs(VarId v, const Term& t);
VarId max_var_id(const Term& t);  // 0 if no variables; callers add 1 for freshness

/// Display names for variables; ids without an entry print as "v<id>".
struct VarNames {
    std::unordered_map<VarId, std::string> names;
    std::string name_of(VarId id) const;
};

std::string term_to_string(const Term& t, const VarNames* names = nullptr);

}  // namespace loopfinder
