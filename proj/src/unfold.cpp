#include "loopfinder/unfold.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace loopfinder {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::All:
            return "all";
        case Strategy::Leftmost:
            return "lm";
        case Strategy::LeftmostNonEmpty:
            return "lmne";
    }
    return "?";
}

namespace {

bool contains_position(const std::vector<Position>& ps, const Position& p) {
    return std::find(ps.begin(), ps.end(), p) != ps.end();
}

void push_unique(std::vector<Unfolded>& out, std::set<FRule, FRuleLess>& seen, FRule rule,
                 const Position& at, int rule_index) {
    if (!seen.insert(canonical_rule(rule)).second)
        return;
    out.push_back({std::move(rule), at, rule_index});
}

std::vector<FRule> strip(std::vector<Unfolded> xs) {
    std::vector<FRule> out;
    out.reserve(xs.size());
    for (Unfolded& x : xs)
        out.push_back(std::move(x.rule));
    return out;
}

}  // namespace

std::vector<Unfolded> forward_unfold_ex(const FRule& rule, const Term& guide, const Position& p,
                                        const Trs& R, VarSupply& supply) {
    if (!contains_position(dpos(rule.rhs, guide), p))
        throw std::invalid_argument("forward_unfold: " + position_to_string(p) +
                                    " is not a disagreement position");
    std::vector<Unfolded> out;
    std::set<FRule, FRuleLess> seen;
    std::vector<Position> around = npos(rule.rhs, p);
    for (const Position& q : around) {
        if (!q.is_prefix_of(p))
            continue;
        auto theta = mgu(subterm_at(rule.rhs, q), subterm_at(guide, q));
        if (theta)
            push_unique(out, seen, apply_subst(rule, *theta), q, -1);
    }
    for (const Position& q : around) {
        Term at_q = subterm_at(rule.rhs, q);
        for (std::size_t i = 0; i < R.rules.size(); ++i) {
            Rule variant = rename_apart(R.rules[i], supply);
            auto theta = mgu(at_q, variant.lhs);
            if (!theta)
                continue;
            FRule narrowed{rule.lhs, replace_at(rule.rhs, q, variant.rhs)};
            push_unique(out, seen, apply_subst(narrowed, *theta), q, static_cast<int>(i));
        }
    }
    return out;
}

std::vector<FRule> forward_unfold(const FRule& rule, const Term& guide, const Position& p,
                                  const Trs& R, VarSupply& supply) {
    return strip(forward_unfold_ex(rule, guide, p, R, supply));
}

std::vector<Unfolded> backward_unfold_ex(const FRule& rule, const Term& guide, const Position& p,
                                         const Trs& R, VarSupply& supply) {
    if (!contains_position(dpos(guide, rule.lhs), p))
        throw std::invalid_argument("backward_unfold: " + position_to_string(p) +
                                    " is not a disagreement position");
    std::vector<Unfolded> out;
    std::set<FRule, FRuleLess> seen;
    std::vector<Position> around = npos(rule.lhs, p);
    for (const Position& q : around) {
        if (!q.is_prefix_of(p))
            continue;
        auto theta = mgu(subterm_at(guide, q), subterm_at(rule.lhs, q));
        if (theta)
            push_unique(out, seen, apply_subst(rule, *theta), q, -1);
    }
    for (const Position& q : around) {
        Term at_q = subterm_at(rule.lhs, q);
        for (std::size_t i = 0; i < R.rules.size(); ++i) {
            Rule variant = rename_apart(R.rules[i], supply);
            auto theta = mgu(at_q, variant.rhs);
            if (!theta)
                continue;
            FRule narrowed{replace_at(rule.lhs, q, variant.lhs), rule.rhs};
            push_unique(out, seen, apply_subst(narrowed, *theta), q, static_cast<int>(i));
        }
    }
    return out;
}

std::vector<FRule> backward_unfold(const FRule& rule, const Term& guide, const Position& p,
                                   const Trs& R, VarSupply& supply) {
    return strip(backward_unfold_ex(rule, guide, p, R, supply));
}

std::vector<Position> select_positions(Strategy strategy, const FRule& rule1, const FRule& rule2,
                                       const Trs& R, VarSupply& supply) {
    std::vector<Position> candidates = dpos(rule1.rhs, rule2.lhs);
    switch (strategy) {
        case Strategy::All:
            return candidates;
        case Strategy::Leftmost:
            if (candidates.empty())
                return {};
            return {candidates.front()};
        case Strategy::LeftmostNonEmpty:
            for (const Position& p : candidates) {
                if (!forward_unfold_ex(rule1, rule2.lhs, p, R, supply).empty() ||
                    !backward_unfold_ex(rule2, rule1.rhs, p, R, supply).empty())
                    return {p};
            }
            return {};
    }
    return {};
}

namespace {

struct Candidate {
    SyntacticLoop loop;
    int case_id;
    Position pos;
    int rule_index;
};

// Emits every validated candidate in deterministic order; emit returns false
// to abort the step.
class GuStepper {
public:
    GuStepper(const Trs& R, Strategy strategy, VarSupply& supply)
        : R_(R), strategy_(strategy), supply_(supply), defined_(defined_symbols(R)) {}

    bool run(const std::vector<SyntacticLoop>& X,
             const std::function<bool(Candidate&&)>& emit) {
        for (const SyntacticLoop& loop : X)
            if (!step_loop(loop, emit))
                return false;
        return true;
    }

private:
    const Trs& R_;
    Strategy strategy_;
    VarSupply& supply_;
    std::set<Symbol> defined_;

    bool offer(std::vector<FRule> rules, int case_id, const Position& pos, int rule_index,
               const std::function<bool(Candidate&&)>& emit) {
        SyntacticLoop cand;
        cand.rules.reserve(rules.size());
        for (FRule& r : rules)
            cand.rules.push_back(rename_apart(r, supply_));
        if (!is_syntactic_loop(cand, defined_))
            return true;
        return emit({std::move(cand), case_id, pos, rule_index});
    }

    bool step_loop(const SyntacticLoop& loop, const std::function<bool(Candidate&&)>& emit) {
        std::size_t n = loop.size();
        if (n == 1) {
            const FRule& rule = loop.rules[0];
            for (const Position& p : select_positions(strategy_, rule, rule, R_, supply_)) {
                for (Unfolded& u : forward_unfold_ex(rule, rule.lhs, p, R_, supply_))
                    if (!offer({std::move(u.rule)}, 4, p, u.rule_index, emit))
                        return false;
                for (Unfolded& u : backward_unfold_ex(rule, rule.rhs, p, R_, supply_))
                    if (!offer({std::move(u.rule)}, 4, p, u.rule_index, emit))
                        return false;
            }
            return true;
        }
        // Adjacent windows in cyclic order: (i, i+1 mod n).
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = (i + 1) % n;
            auto theta = mgu(loop.rules[i].rhs, loop.rules[j].lhs);
            if (!theta)
                continue;
            FRule merged{theta->apply(loop.rules[i].lhs), theta->apply(loop.rules[j].rhs)};
            std::vector<FRule> rest{std::move(merged)};
            for (std::size_t k = (j + 1) % n; k != i; k = (k + 1) % n)
                rest.push_back(loop.rules[k]);
            if (!offer(std::move(rest), 1, Position::root(), -1, emit))
                return false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = (i + 1) % n;
            for (const Position& p :
                 select_positions(strategy_, loop.rules[i], loop.rules[j], R_, supply_)) {
                for (Unfolded& u :
                     forward_unfold_ex(loop.rules[i], loop.rules[j].lhs, p, R_, supply_)) {
                    std::vector<FRule> rules = loop.rules;
                    rules[i] = std::move(u.rule);
                    if (!offer(std::move(rules), 2, p, u.rule_index, emit))
                        return false;
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = (i + 1) % n;
            for (const Position& p :
                 select_positions(strategy_, loop.rules[i], loop.rules[j], R_, supply_)) {
                for (Unfolded& u :
                     backward_unfold_ex(loop.rules[j], loop.rules[i].rhs, p, R_, supply_)) {
                    std::vector<FRule> rules = loop.rules;
                    rules[j] = std::move(u.rule);
                    if (!offer(std::move(rules), 3, p, u.rule_index, emit))
                        return false;
                }
            }
        }
        return true;
    }
};

}  // namespace

std::vector<SyntacticLoop> gu_step(const std::vector<SyntacticLoop>& X, const Trs& R,
                                   Strategy strategy, VarSupply& supply) {
    std::vector<SyntacticLoop> out;
    LoopKeySet seen;
    GuStepper stepper(R, strategy, supply);
    stepper.run(X, [&](Candidate&& c) {
        if (seen.insert(loop_key(c.loop)).second)
            out.push_back(std::move(c.loop));
        return true;
    });
    return out;
}

IterationReport gunf_iterate(const Trs& R, Strategy strategy, const UnfoldBudget& budget,
                             const LoopCallback& on_loop, VarSupply& supply,
                             const GunfOptions& options) {
    using Clock = std::chrono::steady_clock;
    const Clock::time_point deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget.wall_seconds));

    IterationReport report;
    DepGraph graph = build_graph(R);
    std::vector<SyntacticLoop> frontier = simple_cycles(graph, options.cycle_limits, supply);

    LoopKeySet seen;
    for (const SyntacticLoop& loop : frontier) {
        seen.insert(loop_key(loop));
        ++report.generated;
        if (loop.is_singleton() && on_loop(loop)) {
            report.stopped_by_callback = true;
            return report;
        }
    }

    GuStepper stepper(R, strategy, supply);
    while (!frontier.empty()) {
        if (report.iterations >= budget.max_iterations) {
            report.budget_exhausted = true;
            return report;
        }
        if (Clock::now() >= deadline) {
            report.budget_exhausted = true;
            return report;
        }
        std::vector<SyntacticLoop> next;
        std::uint64_t since_check = 0;
        bool stopped = false;
        bool over_budget = false;
        stepper.run(frontier, [&](Candidate&& c) {
            if (++since_check % 64 == 0 && Clock::now() >= deadline) {
                over_budget = true;
                return false;
            }
            if (!seen.insert(loop_key(c.loop)).second)
                return true;
            ++report.generated;
            if (options.trace) {
                *options.trace << "[unfold] it=" << report.iterations + 1 << " case=" << c.case_id
                               << " p=" << position_to_string(c.pos);
                if (c.rule_index >= 0)
                    *options.trace << " via=R" << c.rule_index + 1;
                *options.trace << " " << loop_to_string(c.loop, &R.var_names) << '\n';
            }
            if (c.loop.is_singleton() && on_loop(c.loop)) {
                stopped = true;
                ++report.iterations;
                return false;
            }
            if (report.generated >= budget.max_generated) {
                over_budget = true;
                return false;
            }
            next.push_back(std::move(c.loop));
            return true;
        });
        if (stopped) {
            report.stopped_by_callback = true;
            return report;
        }
        if (over_budget) {
            report.budget_exhausted = true;
            return report;
        }
        ++report.iterations;
        frontier = std::move(next);
    }
    report.frontier_empty = true;
    return report;
}

}  // namespace loopfinder
