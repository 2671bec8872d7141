#include <doctest.h>

#include "loopfinder/rule.hpp"
#include "loopfinder/subst.hpp"
#include "support/build.hpp"
#include "support/oracle.hpp"

using namespace loopfinder;
using namespace testsupport;

TEST_CASE("substitution basics") {
    Substitution s;
    CHECK(s.is_identity());
    s.bind(0, Term::var(0));  // identity binding is dropped
    CHECK(s.is_identity());
    s.bind(0, T("g(y)"));
    CHECK(s.apply(T("f(x,x)")) == T("f(g(y),g(y))"));
    CHECK(subst_to_string(Substitution::identity()) == "id");

    Substitution u;
    u.bind(1, T("a"));
    Substitution composed = s.compose(u);  // x -> g(a), y -> a
    CHECK(composed.apply(T("f(x,y)")) == T("f(g(a),a)"));
    CHECK(composed.apply(T("x")) == u.apply(s.apply(T("x"))));
}

TEST_CASE("compose agrees with sequential application") {
    TermGen gen(4321);
    for (int i = 0; i < 200; ++i) {
        Substitution a, b;
        a.bind(0, gen.term(2));
        b.bind(1, gen.term(2));
        Term t = gen.term(3);
        CHECK(a.compose(b).apply(t) == b.apply(a.apply(t)));
    }
}

TEST_CASE("var supply freshness") {
    VarSupply supply(10);
    VarId a = supply.fresh();
    VarId b = supply.fresh();
    CHECK(a != b);
    CHECK(a >= 10);
    supply.reserve_up_to(50);
    CHECK(supply.fresh() == 51);
}

TEST_CASE("mgu on the standard cases") {
    CHECK_FALSE(mgu(T("f(x,x,x)"), T("f(s(h),s(1),x)")).has_value());
    CHECK(mgu(T("g#(1)"), T("g#(1)")) == Substitution::identity());
    CHECK_FALSE(mgu(T("x"), T("s(x)")).has_value());  // occurs check
    CHECK_FALSE(mgu(T("f#(0)"), T("f(0)")).has_value());  // marked vs plain root

    auto theta = mgu(T("f(x,g(y))"), T("f(g(y),x)"));
    REQUIRE(theta);
    CHECK(theta->apply(T("f(x,g(y))")) == theta->apply(T("f(g(y),x)")));
}

TEST_CASE("mgu soundness and idempotence on random pairs") {
    TermGen gen(2024);
    int unified = 0;
    for (int i = 0; i < 500; ++i) {
        Term s = gen.term(3);
        Term t = gen.term(3);
        auto theta = mgu(s, t);
        if (!theta)
            continue;
        ++unified;
        CHECK(theta->apply(s) == theta->apply(t));
        // Idempotence: applying twice equals applying once.
        CHECK(theta->apply(theta->apply(s)) == theta->apply(s));
    }
    CHECK(unified > 20);
}

TEST_CASE("matching") {
    CHECK(match(T("f(x,x)", {"x"}), T("f(g(a),g(a))")).has_value());
    CHECK_FALSE(match(T("f(x,x)"), T("f(a,b)")).has_value());
    CHECK(match(T("h"), T("h")) == Substitution::identity());
    CHECK_FALSE(match(T("f(a)"), T("x")).has_value());  // rigid against variable
    CHECK(match(T("x"), T("g(x)")).has_value());        // plain binding, no occurs check

    SUBCASE("repeated variables must map consistently, including to themselves") {
        CHECK(match(T("f(x,x)"), T("f(x,x)")).has_value());
        CHECK_FALSE(match(T("f(x,x)"), T("f(x,a)")).has_value());
        CHECK_FALSE(match(T("f(x,x)"), T("f(a,x)")).has_value());
    }
}

TEST_CASE("match result is the witness substitution") {
    TermGen gen(77);
    for (int i = 0; i < 300; ++i) {
        Term l = gen.term(3);
        Term t = gen.term(3);
        auto theta = match(l, t);
        if (theta)
            CHECK(theta->apply(l) == t);
    }
}

TEST_CASE("rename_apart produces disjoint variants") {
    VarSupply supply(100);
    FRule r = FR("f#(x,x)", "f#(g(x),h(x))");
    FRule v1 = rename_apart(r, supply);
    FRule v2 = rename_apart(r, supply);
    CHECK(is_variant(v1, r));
    CHECK(is_variant(v2, r));
    for (VarId a : rule_vars(v1))
        for (VarId b : rule_vars(v2))
            CHECK(a != b);

    FRule ground = FR("h#", "0#");
    CHECK(rename_apart(ground, supply) == ground);
}

TEST_CASE("canonical rule forms identify variants") {
    FRule a = FR("f#(y,y)", "f#(g(y),h(y))", {"q", "y"});
    FRule b = FR("f#(x,x)", "f#(g(x),h(x))");
    CHECK(canonical_rule(a) == canonical_rule(b));
    CHECK(canonical_rule(canonical_rule(a)) == canonical_rule(a));
    CHECK_FALSE(canonical_rule(FR("h#", "0#")) == canonical_rule(FR("h#", "1#")));

    SUBCASE("rhs-only variables are renamed too") {
        FRule c = FR("f#(x)", "f#(y)");
        FRule d = FR("f#(y)", "f#(x)");
        CHECK(canonical_rule(c) == canonical_rule(d));
    }
}
