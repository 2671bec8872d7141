#include "loopfinder/semi_unify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

namespace loopfinder {

// The solver decides s.theta1.theta2 = t.theta1 by reasoning about the value
// of each variable x after theta1 and k further applications of theta2; the
// pair (x, k) is one solver node. The input equation links s at shift level 1
// with t at level 0. Non-variable subterms are flattened into auxiliary
// variables whose defining structure holds at every level, so all reasoning
// happens on (variable, level) nodes:
//
//   - union-find classes collect nodes with equal values; a class may carry
//     one shallow structure f(n1,...,nk) over child nodes;
//   - equal values stay equal under theta2, so a class's structure projects
//     onto the class of its members' level-successors (shift congruence);
//   - a class whose value properly contains a value at the same or a later
//     level has no finite solution. Since applying theta2 never shrinks a
//     term, this is exactly a cycle through a structure edge in the graph
//     whose edges are "contains" (class -> child class) and "level above"
//     (class of (x,k+1) -> class of (x,k)).
//
// When the closure succeeds, reading back the level-0 classes gives theta1
// and matching s.theta1 against t.theta1 gives theta2.
namespace {

struct Key {
    VarId var;
    int level;
    bool operator==(const Key& o) const { return var == o.var && level == o.level; }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        return std::hash<VarId>{}(k.var) * 1000003u + static_cast<std::size_t>(k.level);
    }
};

struct ClassInfo {
    bool has_structure = false;
    Symbol sym;
    std::vector<int> children;  // node indices
    int succ = -1;              // node handle into the successor-level class
    std::vector<int> members;
};

class Solver {
public:
    Solver(const Term& s, const Term& t) : lhs_(s), rhs_(t) {
        VarId top = std::max(max_var_id(s), max_var_id(t));
        next_aux_ = top + 1;
        op_budget_ = 20000 + 64 * static_cast<std::uint64_t>(s.size() + t.size());
    }

    std::optional<std::pair<Substitution, Substitution>> run(SemiStats* stats) {
        int ns = ensure(flatten(lhs_), 1);
        int nt = ensure(flatten(rhs_), 0);
        pending_.push_back({ns, nt});
        bool ok = saturate();
        if (stats) {
            stats->ops = ops_;
            stats->overflowed = overflowed_;
        }
        if (!ok)
            return std::nullopt;

        Substitution theta1 = extract_theta1();
        Term s1 = theta1.apply(lhs_);
        Term t1 = theta1.apply(rhs_);
        auto theta2 = match(s1, t1);
        if (!theta2 || theta2->apply(s1) != t1) {
            if (stats)
                stats->extraction_failed = true;
            return std::nullopt;
        }
        return std::make_pair(std::move(theta1), std::move(*theta2));
    }

private:
    Term lhs_, rhs_;
    VarId next_aux_;
    std::unordered_map<Term, VarId, TermHash> aux_of_;
    struct Def {
        Symbol sym;
        std::vector<VarId> children;
    };
    std::unordered_map<VarId, Def> defs_;

    std::unordered_map<Key, int, KeyHash> node_of_;
    std::vector<Key> keys_;
    std::vector<int> parent_;
    std::vector<ClassInfo> info_;  // valid at find-roots
    std::deque<std::pair<int, int>> pending_;
    std::deque<int> dirty_;
    bool failed_ = false;
    bool overflowed_ = false;
    std::uint64_t ops_ = 0;
    std::uint64_t op_budget_;

    VarId flatten(const Term& t) {
        if (t.is_var())
            return t.var_id();
        auto it = aux_of_.find(t);
        if (it != aux_of_.end())
            return it->second;
        Def def;
        def.sym = t.sym();
        for (const Term& a : t.args())
            def.children.push_back(flatten(a));
        VarId id = next_aux_++;
        defs_.emplace(id, std::move(def));
        aux_of_.emplace(t, id);
        return id;
    }

    int find(int n) {
        while (parent_[n] != n) {
            parent_[n] = parent_[parent_[n]];
            n = parent_[n];
        }
        return n;
    }

    int ensure(VarId v, int level) {
        Key key{v, level};
        auto it = node_of_.find(key);
        if (it != node_of_.end())
            return it->second;
        int idx = static_cast<int>(keys_.size());
        node_of_.emplace(key, idx);
        keys_.push_back(key);
        parent_.push_back(idx);
        info_.emplace_back();
        info_[idx].members.push_back(idx);
        auto def = defs_.find(v);
        if (def != defs_.end()) {
            std::vector<int> children;
            children.reserve(def->second.children.size());
            for (VarId c : def->second.children)
                children.push_back(ensure(c, level));
            info_[idx].has_structure = true;
            info_[idx].sym = def->second.sym;
            info_[idx].children = std::move(children);
            dirty_.push_back(idx);
        }
        auto below = node_of_.find(Key{v, level - 1});
        if (level > 0 && below != node_of_.end())
            link_succ(find(below->second), idx);
        auto above = node_of_.find(Key{v, level + 1});
        if (above != node_of_.end())
            link_succ(find(idx), above->second);
        return idx;
    }

    void link_succ(int root, int succ_node) {
        if (info_[root].succ < 0) {
            info_[root].succ = succ_node;
            dirty_.push_back(root);
        } else {
            pending_.push_back({info_[root].succ, succ_node});
        }
    }

    void unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb)
            return;
        if (info_[ra].members.size() < info_[rb].members.size())
            std::swap(ra, rb);
        parent_[rb] = ra;
        ClassInfo moved = std::move(info_[rb]);
        info_[rb] = ClassInfo{};
        ClassInfo& keep = info_[ra];
        keep.members.insert(keep.members.end(), moved.members.begin(), moved.members.end());
        if (moved.has_structure) {
            if (keep.has_structure) {
                if (!(keep.sym == moved.sym)) {
                    failed_ = true;
                    return;
                }
                for (std::size_t i = 0; i < keep.children.size(); ++i)
                    pending_.push_back({keep.children[i], moved.children[i]});
            } else {
                keep.has_structure = true;
                keep.sym = moved.sym;
                keep.children = moved.children;
            }
        }
        if (moved.succ >= 0) {
            if (keep.succ >= 0)
                pending_.push_back({keep.succ, moved.succ});
            else
                keep.succ = moved.succ;
        }
        dirty_.push_back(ra);
    }

    void project(int root) {
        if (!info_[root].has_structure || info_[root].succ < 0)
            return;
        Symbol sym = info_[root].sym;
        std::vector<Key> child_keys;
        child_keys.reserve(info_[root].children.size());
        for (int c : info_[root].children)
            child_keys.push_back(keys_[c]);
        int succ_node = info_[root].succ;
        std::vector<int> shifted;
        shifted.reserve(child_keys.size());
        for (const Key& k : child_keys)
            shifted.push_back(ensure(k.var, k.level + 1));
        int sroot = find(succ_node);
        if (info_[sroot].has_structure) {
            if (!(info_[sroot].sym == sym)) {
                failed_ = true;
                return;
            }
            for (std::size_t i = 0; i < shifted.size(); ++i)
                pending_.push_back({info_[sroot].children[i], shifted[i]});
        } else {
            info_[sroot].has_structure = true;
            info_[sroot].sym = sym;
            info_[sroot].children = std::move(shifted);
            dirty_.push_back(sroot);
        }
    }

    bool saturate() {
        while (!failed_ && (!pending_.empty() || !dirty_.empty())) {
            if (++ops_ > op_budget_) {
                overflowed_ = true;
                break;
            }
            if (ops_ % 128 == 0 && descent_cycle())
                return false;
            if (!pending_.empty()) {
                auto [a, b] = pending_.front();
                pending_.pop_front();
                unite(a, b);
            } else {
                int r = dirty_.front();
                dirty_.pop_front();
                project(find(r));
            }
        }
        if (failed_)
            return false;
        if (descent_cycle())
            return false;
        // An exhausted budget without a detected cycle is treated as failure;
        // it has never been observed on well-formed inputs.
        return !overflowed_;
    }

    // Strongly connected components over classes, edges being structure
    // children (marked) and level-above links (unmarked). A marked edge
    // inside a component means some value must properly contain a value at
    // the same or a later level: no finite solution.
    bool descent_cycle() {
        int n = static_cast<int>(keys_.size());
        std::vector<int> roots;
        std::vector<int> root_ix(n, -1);
        for (int i = 0; i < n; ++i) {
            if (find(i) == i) {
                root_ix[i] = static_cast<int>(roots.size());
                roots.push_back(i);
            }
        }
        int m = static_cast<int>(roots.size());
        std::vector<std::vector<int>> adj(m);
        std::vector<std::pair<int, int>> struct_edges;
        for (int ri = 0; ri < m; ++ri) {
            const ClassInfo& c = info_[roots[ri]];
            if (c.has_structure) {
                for (int ch : c.children) {
                    int to = root_ix[find(ch)];
                    adj[ri].push_back(to);
                    struct_edges.push_back({ri, to});
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            const Key& k = keys_[i];
            auto below = node_of_.find(Key{k.var, k.level - 1});
            if (k.level > 0 && below != node_of_.end())
                adj[root_ix[find(i)]].push_back(root_ix[find(below->second)]);
        }

        // Tarjan, iterative.
        std::vector<int> index(m, -1), low(m, 0), comp(m, -1);
        std::vector<bool> on_stack(m, false);
        std::vector<int> stack;
        int next_index = 0, next_comp = 0;
        struct Frame {
            int v;
            std::size_t child;
        };
        for (int start = 0; start < m; ++start) {
            if (index[start] != -1)
                continue;
            std::vector<Frame> frames{{start, 0}};
            index[start] = low[start] = next_index++;
            stack.push_back(start);
            on_stack[start] = true;
            while (!frames.empty()) {
                Frame& f = frames.back();
                if (f.child < adj[f.v].size()) {
                    int w = adj[f.v][f.child++];
                    if (index[w] == -1) {
                        index[w] = low[w] = next_index++;
                        stack.push_back(w);
                        on_stack[w] = true;
                        frames.push_back({w, 0});
                    } else if (on_stack[w]) {
                        low[f.v] = std::min(low[f.v], index[w]);
                    }
                } else {
                    int v = f.v;
                    frames.pop_back();
                    if (!frames.empty())
                        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                    if (low[v] == index[v]) {
                        while (true) {
                            int w = stack.back();
                            stack.pop_back();
                            on_stack[w] = false;
                            comp[w] = next_comp;
                            if (w == v)
                                break;
                        }
                        ++next_comp;
                    }
                }
            }
        }
        for (auto [from, to] : struct_edges)
            if (comp[from] == comp[to])
                return true;
        return false;
    }

    Substitution extract_theta1() {
        std::vector<VarId> orig = term_vars(lhs_);
        for (VarId v : term_vars(rhs_))
            if (std::find(orig.begin(), orig.end(), v) == orig.end())
                orig.push_back(v);
        std::sort(orig.begin(), orig.end());

        std::map<int, Term> memo;
        VarId fresh = next_aux_;
        Substitution theta1;
        for (VarId v : orig) {
            auto it = node_of_.find(Key{v, 0});
            if (it == node_of_.end())
                continue;
            Term value = readback(find(it->second), memo, fresh);
            if (!(value.is_var() && value.var_id() == v))
                theta1.bind(v, value);
        }
        return theta1;
    }

    Term readback(int root, std::map<int, Term>& memo, VarId& fresh) {
        auto it = memo.find(root);
        if (it != memo.end())
            return it->second;
        const ClassInfo& c = info_[root];
        Term result;
        if (c.has_structure) {
            std::vector<int> children = c.children;
            std::vector<Term> args;
            args.reserve(children.size());
            Symbol sym = c.sym;
            for (int ch : children)
                args.push_back(readback(find(ch), memo, fresh));
            result = Term::app(std::move(sym), std::move(args));
        } else {
            // Structureless classes hold only proper variables. A level-0
            // member keeps its own name; otherwise the value is some term
            // never seen at level 0, represented by a fresh variable.
            VarId best = 0;
            bool found = false;
            for (int mnode : c.members) {
                const Key& k = keys_[mnode];
                if (k.level == 0 && (!found || k.var < best)) {
                    best = k.var;
                    found = true;
                }
            }
            result = Term::var(found ? best : fresh++);
        }
        memo.emplace(root, result);
        return result;
    }
};

}  // namespace

std::optional<std::pair<Substitution, Substitution>> semi_unify(const Term& s, const Term& t,
                                                                SemiStats* stats) {
    Solver solver(s, t);
    return solver.run(stats);
}

}  // namespace loopfinder
