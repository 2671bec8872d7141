#include "loopfinder/verify.hpp"

#include <sstream>
#include <unordered_set>

namespace loopfinder {

namespace {

struct SearchNode {
    Term term;
    int depth;
    int parent;     // index into the node arena, -1 for the root
    RewriteStep via;  // step that produced this node (undefined for the root)
};

std::optional<std::pair<Position, Substitution>> find_embedding(const Term& u, const Term& v) {
    for (const Position& q : positions(v)) {
        auto theta = match(u, subterm_at(v, q));
        if (theta)
            return std::make_pair(q, std::move(*theta));
    }
    return std::nullopt;
}

}  // namespace

std::optional<RewriteTrace> verify_loop(const Trs& R, const Term& u, const VerifyBounds& bounds) {
    std::vector<SearchNode> arena;
    std::unordered_set<Term, TermHash> visited;
    arena.push_back({u, 0, -1, {}});
    visited.insert(u);

    auto close = [&](int node_ix, Position q, Substitution theta) {
        RewriteTrace trace;
        trace.start = u;
        std::vector<int> chain;
        for (int ix = node_ix; ix != 0; ix = arena[static_cast<std::size_t>(ix)].parent)
            chain.push_back(ix);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            trace.steps.push_back(arena[static_cast<std::size_t>(*it)].via);
        trace.closing_pos = std::move(q);
        trace.closing_subst = std::move(theta);
        return trace;
    };

    for (std::size_t head = 0; head < arena.size(); ++head) {
        if (arena.size() > bounds.max_nodes)
            return std::nullopt;
        SearchNode node = arena[head];
        if (node.depth >= bounds.max_depth)
            continue;
        for (RewriteStep& step : successors(node.term, R)) {
            Term result = step.result;
            // The closing term may have been seen before (typically it is the
            // start itself), so the embedding test comes before the dedup.
            if (auto hit = find_embedding(u, result)) {
                arena.push_back({result, node.depth + 1, static_cast<int>(head), std::move(step)});
                return close(static_cast<int>(arena.size() - 1), std::move(hit->first),
                             std::move(hit->second));
            }
            if (!visited.insert(result).second)
                continue;
            arena.push_back({result, node.depth + 1, static_cast<int>(head), std::move(step)});
            if (arena.size() > bounds.max_nodes)
                return std::nullopt;
        }
    }
    return std::nullopt;
}

bool replay_trace(const Trs& R, const RewriteTrace& trace) {
    if (trace.steps.empty())
        return false;
    Term current = trace.start;
    for (const RewriteStep& step : trace.steps) {
        if (step.rule_index < 0 || step.rule_index >= static_cast<int>(R.rules.size()))
            return false;
        bool found = false;
        for (const RewriteStep& legal : successors(current, R)) {
            if (legal.pos == step.pos && legal.rule_index == step.rule_index &&
                legal.result == step.result) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
        current = step.result;
    }
    if (!has_position(current, trace.closing_pos))
        return false;
    return subterm_at(current, trace.closing_pos) == trace.closing_subst.apply(trace.start);
}

std::string trace_to_string(const RewriteTrace& trace, const VarNames* names) {
    std::ostringstream os;
    Term current = trace.start;
    for (const RewriteStep& step : trace.steps) {
        os << "  " << term_to_string(current, names) << "  --[R" << step.rule_index + 1 << " @ "
           << position_to_string(step.pos) << "]-->  " << term_to_string(step.result, names)
           << '\n';
        current = step.result;
    }
    os << "  closes at " << position_to_string(trace.closing_pos) << " with theta = "
       << subst_to_string(trace.closing_subst, names) << '\n';
    return os.str();
}

}  // namespace loopfinder
