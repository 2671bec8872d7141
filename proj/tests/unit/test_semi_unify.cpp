#include <doctest.h>

#include "loopfinder/semi_unify.hpp"
#include "support/build.hpp"
#include "support/oracle.hpp"

using namespace loopfinder;
using namespace testsupport;

namespace {

bool witness_ok(const Term& s, const Term& t,
                const std::pair<Substitution, Substitution>& thetas) {
    const auto& [t1, t2] = thetas;
    return t2.apply(t1.apply(s)) == t1.apply(t);
}

}  // namespace

TEST_CASE("semi-unification on known instances") {
    SUBCASE("instantiation on the left, growth on the right") {
        Term s = T("f(g(x,0),y)", {"x", "y"});
        Term t = T("f(g(0,x),h(y))", {"x", "y"});
        auto r = semi_unify(s, t);
        REQUIRE(r);
        CHECK(witness_ok(s, t, *r));
        Substitution expected1;
        expected1.bind(0, T("0"));
        CHECK(r->first == expected1);
        Substitution expected2;
        expected2.bind(1, T("h(y)", {"x", "y"}));
        CHECK(r->second == expected2);
    }

    SUBCASE("reflexivity") {
        Term t = T("f(g(x,0),y)");
        auto r = semi_unify(t, t);
        REQUIRE(r);
        CHECK(r->first.is_identity());
        CHECK(r->second.is_identity());
    }

    SUBCASE("duplicated variable against duplicated structure") {
        Term s = T("f(x,x)");
        Term t = T("f(g(x),g(x))");
        auto r = semi_unify(s, t);
        REQUIRE(r);
        CHECK(r->first.is_identity());
        Substitution expected2;
        expected2.bind(0, T("g(x)"));
        CHECK(r->second == expected2);
    }

    SUBCASE("distinct constants") {
        CHECK_FALSE(semi_unify(T("f(0)"), T("f(1)")));
    }

    SUBCASE("matching instance") {
        Term s = T("f(s(h),s(h),x)");
        Term t = T("f(x,x,x)");
        auto r = semi_unify(s, t);
        REQUIRE(r);
        CHECK(witness_ok(s, t, *r));
        CHECK(r->first.apply(s) == T("f(s(h),s(h),s(h))"));
    }

    SUBCASE("size argument rejects growth on the left") {
        CHECK_FALSE(semi_unify(T("f(x)"), T("x")));
        CHECK_FALSE(semi_unify(T("f(y)"), T("y")));
        CHECK(semi_unify(T("x"), T("f(x)")).has_value());
    }

    SUBCASE("shared variable at both levels") {
        // Needs theta1 = {y/g(h(x))}, theta2 = {x/h(x)}: the instantiation of
        // y mentions the image of x under theta2, not x's own value.
        Term s = T("f(x,g(x))");
        Term t = T("f(h(x),y)");
        auto r = semi_unify(s, t);
        REQUIRE(r);
        CHECK(witness_ok(s, t, *r));
    }

    SUBCASE("incompatible duplicate images") {
        CHECK_FALSE(semi_unify(T("f(x,x)"), T("f(y,g(y))")));
        CHECK_FALSE(semi_unify(T("f(x,x)"), T("f(0,1)")));
        CHECK(semi_unify(T("f(x,x)"), T("f(y,y)")).has_value());
    }
}

TEST_CASE("semi-unification subsumes unification and matching") {
    TermGen gen(31337);
    int hits = 0;
    for (int i = 0; i < 400; ++i) {
        Term s = gen.term(3);
        Term t = gen.term(3);
        if (mgu(s, t) || match(s, t)) {
            ++hits;
            auto r = semi_unify(s, t);
            REQUIRE_MESSAGE(r, term_to_string(s), " vs ", term_to_string(t));
            CHECK(witness_ok(s, t, *r));
        }
    }
    CHECK(hits > 30);
}

TEST_CASE("semi-unification agrees with the brute-force oracle") {
    TermGen gen(555);
    std::vector<Term> pool = term_pool(gen.signature, gen.vars, 2);
    int positives = 0;
    for (int i = 0; i < 400; ++i) {
        Term s = gen.term(2);
        Term t = gen.term(2);
        SemiStats stats;
        auto got = semi_unify(s, t, &stats);
        CHECK_FALSE(stats.overflowed);
        CHECK_FALSE(stats.extraction_failed);
        bool expected = oracle_semi_unifiable(s, t, pool);
        REQUIRE_MESSAGE(got.has_value() == expected, term_to_string(s), " vs ",
                        term_to_string(t));
        if (got) {
            ++positives;
            CHECK(witness_ok(s, t, *got));
        }
    }
    CHECK(positives > 50);
}

TEST_CASE("semi-unification handles deeper structure without overflowing") {
    TermGen gen(8080);
    for (int i = 0; i < 300; ++i) {
        Term s = gen.term(4);
        Term t = gen.term(4);
        SemiStats stats;
        auto got = semi_unify(s, t, &stats);
        CHECK_FALSE(stats.overflowed);
        CHECK_FALSE(stats.extraction_failed);
        if (got)
            CHECK(witness_ok(s, t, *got));
    }
}
