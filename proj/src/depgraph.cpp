#include "loopfinder/depgraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace loopfinder {

Term cap(const Term& t, const std::set<Symbol>& defined, VarSupply& supply) {
    if (t.is_var())
        return t;
    if (defined.count(t.sym()))
        return supply.fresh_var();
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args())
        args.push_back(cap(a, defined, supply));
    return Term::app(t.sym(), std::move(args));
}

Term ren(const Term& t, VarSupply& supply) {
    if (t.is_var())
        return supply.fresh_var();
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args())
        args.push_back(ren(a, supply));
    return Term::app(t.sym(), std::move(args));
}

bool connectable(const FRule& a, const FRule& b, const std::set<Symbol>& defined) {
    VarSupply supply(std::max(max_var_id(a), max_var_id(b)) + 1);
    Term abstracted = ren(cap(a.rhs, defined, supply), supply);
    return mgu(abstracted, b.lhs).has_value();
}

std::string DepGraph::edge_list() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (arcs[i][j])
                os << i << " -> " << j << '\n';
    return os.str();
}

DepGraph build_graph(const Trs& R) {
    DepGraph g;
    g.nodes = dependency_pairs(R);
    std::set<Symbol> defined = defined_symbols(R);
    std::size_t n = g.nodes.size();
    g.arcs.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.arcs[i][j] = connectable(g.nodes[i], g.nodes[j], defined);
    return g;
}

namespace {

struct TarjanState {
    const DepGraph& g;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int next_comp = 0;

    explicit TarjanState(const DepGraph& graph)
        : g(graph),
          index(graph.nodes.size(), -1),
          low(graph.nodes.size(), 0),
          comp(graph.nodes.size(), -1),
          on_stack(graph.nodes.size(), false) {}

    void dfs(int v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w = 0; w < static_cast<int>(g.nodes.size()); ++w) {
            if (!g.has_arc(v, w))
                continue;
            if (index[w] == -1) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
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
};

}  // namespace

std::vector<std::vector<int>> sccs(const DepGraph& g) {
    int n = static_cast<int>(g.nodes.size());
    TarjanState st(g);
    for (int v = 0; v < n; ++v)
        if (st.index[v] == -1)
            st.dfs(v);
    std::vector<std::vector<int>> by_comp(static_cast<std::size_t>(st.next_comp));
    for (int v = 0; v < n; ++v)
        by_comp[static_cast<std::size_t>(st.comp[v])].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& members : by_comp) {
        std::sort(members.begin(), members.end());
        bool has_arc = false;
        for (int a : members)
            for (int b : members)
                if (g.has_arc(a, b))
                    has_arc = true;
        if (has_arc)
            out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool is_syntactic_loop(const SyntacticLoop& loop, const std::set<Symbol>& defined) {
    std::size_t n = loop.rules.size();
    if (n == 0)
        return false;
    for (const FRule& r : loop.rules)
        if (!is_frule(r))
            return false;
    std::vector<FRule> canon;
    canon.reserve(n);
    for (const FRule& r : loop.rules)
        canon.push_back(canonical_rule(r));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (canon[i] == canon[j])
                return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!connectable(loop.rules[i], loop.rules[(i + 1) % n], defined))
            return false;
    return true;
}

bool LoopKeyLess::operator()(const LoopKey& a, const LoopKey& b) const {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = compare_terms(a[i].first, b[i].first);
        if (c != 0)
            return c < 0;
        c = compare_terms(a[i].second, b[i].second);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

LoopKey loop_key(const SyntacticLoop& loop) {
    LoopKey key;
    key.reserve(loop.rules.size());
    for (const FRule& r : loop.rules) {
        FRule c = canonical_rule(r);
        key.emplace_back(c.lhs, c.rhs);
    }
    std::sort(key.begin(), key.end(), [](const auto& a, const auto& b) {
        int c = compare_terms(a.first, b.first);
        if (c != 0)
            return c < 0;
        return compare_terms(a.second, b.second) < 0;
    });
    return key;
}

std::string loop_to_string(const SyntacticLoop& loop, const VarNames* names) {
    std::string out = "[";
    for (std::size_t i = 0; i < loop.rules.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += rule_to_string(loop.rules[i], names);
    }
    return out + "]";
}

namespace {

// Backward distance to the start node within the component, for pruning
// exact-length cycle search.
std::vector<int> distances_to(const DepGraph& g, const std::vector<int>& comp, int target) {
    std::vector<int> dist(g.nodes.size(), -1);
    std::vector<int> queue{target};
    dist[static_cast<std::size_t>(target)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int u : comp) {
            if (dist[static_cast<std::size_t>(u)] == -1 && g.has_arc(u, v)) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<SyntacticLoop> simple_cycles(const DepGraph& g, const std::vector<int>& component,
                                         const CycleLimits& limits, VarSupply& supply) {
    std::vector<SyntacticLoop> out;
    LoopKeySet seen;
    int max_len = std::min<int>(limits.max_len, static_cast<int>(component.size()));

    auto emit = [&](const std::vector<int>& cycle) {
        SyntacticLoop loop;
        loop.rules.reserve(cycle.size());
        for (int ix : cycle)
            loop.rules.push_back(rename_apart(g.nodes[static_cast<std::size_t>(ix)], supply));
        if (seen.insert(loop_key(loop)).second)
            out.push_back(std::move(loop));
    };

    for (int len = 1; len <= max_len; ++len) {
        if (static_cast<int>(out.size()) >= limits.max_count)
            break;
        // Each cycle is enumerated once, rooted at its smallest node index.
        for (int start : component) {
            if (static_cast<int>(out.size()) >= limits.max_count)
                break;
            std::vector<int> dist = distances_to(g, component, start);
            std::vector<int> path{start};
            std::vector<bool> used(g.nodes.size(), false);
            used[static_cast<std::size_t>(start)] = true;

            std::function<void(int)> dfs = [&](int v) {
                if (static_cast<int>(out.size()) >= limits.max_count)
                    return;
                int remaining = len - static_cast<int>(path.size());
                if (remaining == 0) {
                    if (g.has_arc(v, start))
                        emit(path);
                    return;
                }
                for (int w : component) {
                    if (w <= start || used[static_cast<std::size_t>(w)] || !g.has_arc(v, w))
                        continue;
                    int back = dist[static_cast<std::size_t>(w)];
                    if (back == -1 || back > remaining)
                        continue;
                    used[static_cast<std::size_t>(w)] = true;
                    path.push_back(w);
                    dfs(w);
                    path.pop_back();
                    used[static_cast<std::size_t>(w)] = false;
                }
            };
            dfs(start);
        }
    }
    return out;
}

std::vector<SyntacticLoop> simple_cycles(const DepGraph& g, const CycleLimits& limits,
                                         VarSupply& supply) {
    std::vector<SyntacticLoop> out;
    for (const std::vector<int>& comp : sccs(g)) {
        CycleLimits rest = limits;
        rest.max_count = limits.max_count - static_cast<int>(out.size());
        if (rest.max_count <= 0)
            break;
        std::vector<SyntacticLoop> cycles = simple_cycles(g, comp, rest, supply);
        for (SyntacticLoop& l : cycles)
            out.push_back(std::move(l));
    }
    return out;
}

}  // namespace loopfinder
