#include "loopfinder/prover.hpp"

#include <stdexcept>

namespace loopfinder {

std::string verdict_token(VerdictKind k) {
    switch (k) {
        case VerdictKind::No:
            return "NO";
        case VerdictKind::DontKnow:
            return "DON'T KNOW";
        case VerdictKind::Timeout:
            return "TIMEOUT";
    }
    return "?";
}

namespace {

Term unmark_root(const Term& t) {
    std::vector<Term> args(t.args().begin(), t.args().end());
    return Term::app(unmarked(t.sym()), std::move(args));
}

std::optional<std::pair<Substitution, Substitution>> run_test(const Term& s, const Term& t,
                                                              WitnessTest test) {
    switch (test) {
        case WitnessTest::SemiUnify:
            return semi_unify(s, t);
        case WitnessTest::MatchOnly: {
            auto theta2 = match(s, t);
            if (!theta2)
                return std::nullopt;
            return std::make_pair(Substitution::identity(), std::move(*theta2));
        }
        case WitnessTest::UnifyOnly: {
            auto theta1 = mgu(s, t);
            if (!theta1)
                return std::nullopt;
            return std::make_pair(std::move(*theta1), Substitution::identity());
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<LoopWitness> check_singleton(const SyntacticLoop& loop, WitnessTest test) {
    if (!loop.is_singleton())
        throw std::invalid_argument("check_singleton: loop has more than one rule");
    const FRule& rule = loop.rules[0];
    Term s = unmark_root(rule.lhs);
    Term t = unmark_root(rule.rhs);
    auto thetas = run_test(s, t, test);
    if (!thetas)
        return std::nullopt;
    const auto& [theta1, theta2] = *thetas;
    if (theta2.apply(theta1.apply(s)) != theta1.apply(t))
        return std::nullopt;  // witness must satisfy the loop equation exactly
    LoopWitness w;
    w.compressed = rule;
    w.theta1 = theta1;
    w.theta2 = theta2;
    w.witness_term = theta1.apply(s);
    return w;
}

Verdict prove(const Trs& R, Strategy strategy, const UnfoldBudget& budget,
              const VerifyBounds& verify_bounds, const ProveOptions& options) {
    auto start = std::chrono::steady_clock::now();
    Verdict verdict;

    VarSupply supply(R.first_free_var);
    std::optional<LoopWitness> witness;
    GunfOptions gunf_options;
    gunf_options.cycle_limits = options.cycle_limits;
    gunf_options.trace = options.trace_log;

    IterationReport report = gunf_iterate(
        R, strategy, budget,
        [&](const SyntacticLoop& loop) {
            witness = check_singleton(loop, options.test);
            return witness.has_value();
        },
        supply, gunf_options);

    verdict.stats.iterations = report.iterations;
    verdict.stats.generated = report.generated;
    if (witness) {
        witness->trace = verify_loop(R, witness->witness_term, verify_bounds);
        verdict.kind = VerdictKind::No;
        verdict.witness = std::move(witness);
    } else if (report.frontier_empty) {
        verdict.kind = VerdictKind::DontKnow;
    } else {
        verdict.kind = VerdictKind::Timeout;
    }
    verdict.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return verdict;
}

}  // namespace loopfinder
