#include <doctest.h>

#include <algorithm>
#include <set>

#include "loopfinder/term.hpp"
#include "support/build.hpp"
#include "support/oracle.hpp"

using namespace loopfinder;
using namespace testsupport;

TEST_CASE("symbol equality and marking") {
    Symbol f{"f", 2, SymbolKind::Plain};
    Symbol f1{"f", 1, SymbolKind::Plain};
    CHECK(f == Symbol{"f", 2, SymbolKind::Plain});
    CHECK_FALSE(f == f1);
    CHECK_FALSE(f == marked(f));
    CHECK(marked(f).display() == "f#");
    CHECK(unmarked(marked(f)) == f);
    CHECK_THROWS_AS(marked(marked(f)), std::logic_error);
    CHECK_THROWS_AS(unmarked(f), std::logic_error);
}

TEST_CASE("subterm_at and replace_at") {
    Term t = T("f(s(0),s(1),x)");
    CHECK(subterm_at(t, P({1, 1})) == T("0"));
    CHECK(subterm_at(t, Position::root()) == t);
    CHECK(replace_at(t, Position::root(), T("s(0)")) == T("s(0)"));
    CHECK(replace_at(t, P({1, 1}), T("h")) == T("f(s(h),s(1),x)"));
    CHECK_THROWS_AS(subterm_at(t, P({4})), std::out_of_range);
    CHECK_THROWS_AS(replace_at(t, P({1, 1, 1}), t), std::out_of_range);
    CHECK_THROWS_AS(subterm_at(T("x"), P({1})), std::out_of_range);
}

TEST_CASE("replace round-trips subterms") {
    TermGen gen(1234);
    for (int i = 0; i < 200; ++i) {
        Term t = gen.term(3);
        for (const Position& p : positions(t))
            CHECK(replace_at(t, p, subterm_at(t, p)) == t);
    }
}

TEST_CASE("disagreement positions") {
    SUBCASE("variables share a root") {
        Term s = T("f(s(0),s(1),y)");
        Term t = T("f(x,x,x)");
        CHECK(dpos(s, t) == std::vector<Position>{P({1}), P({2})});
    }
    SUBCASE("identical terms disagree nowhere") {
        Term t = T("f(s(0),s(1),x)");
        CHECK(dpos(t, t).empty());
    }
    SUBCASE("nested disagreements") {
        CHECK(dpos(T("f(g(x,0),y)", {"x", "y"}), T("f(g(0,x),h(y))", {"x", "y"})) ==
              std::vector<Position>{P({1, 1}), P({1, 2}), P({2})});
    }
}

TEST_CASE("dpos agrees with its definition on random terms") {
    TermGen gen(99);
    auto root_of = [](const Term& t) {
        return t.is_var() ? std::string("_bottom") : t.sym().display();
    };
    for (int i = 0; i < 300; ++i) {
        Term s = gen.term(3);
        Term t = gen.term(3);
        std::set<std::vector<int>> expected;
        for (const Position& p : positions(s)) {
            if (!has_position(t, p))
                continue;
            if (root_of(subterm_at(s, p)) == root_of(subterm_at(t, p)))
                continue;
            bool least = true;
            for (const Position& q : positions(s)) {
                if (q.is_prefix_of(p) && !(q == p) &&
                    root_of(subterm_at(s, q)) != root_of(subterm_at(t, q)))
                    least = false;
            }
            if (least)
                expected.insert(p.steps);
        }
        std::set<std::vector<int>> got;
        for (const Position& p : dpos(s, t))
            got.insert(p.steps);
        CHECK(got == expected);

        // Symmetry and prefix-freeness.
        CHECK(dpos(s, t) == dpos(t, s));
        std::vector<Position> ps = dpos(s, t);
        for (const Position& a : ps)
            for (const Position& b : ps)
                if (!(a == b))
                    CHECK_FALSE(a.is_prefix_of(b));
    }
}

TEST_CASE("non-variable positions around a position") {
    Term t = T("f(s(0),s(1),x)");
    CHECK(npos(t, P({1})) == std::vector<Position>{Position::root(), P({1}), P({1, 1})});
    CHECK(npos(t, P({1, 1})) == std::vector<Position>{Position::root(), P({1}), P({1, 1})});
    CHECK(npos(T("x"), Position::root()).empty());
    CHECK_THROWS_AS(npos(t, P({5})), std::out_of_range);
}

TEST_CASE("term printing") {
    CHECK(term_to_string(T("f#(s(0),x)")) == "f#(s(0),v0)");
    VarNames names;
    names.names[0] = "x";
    CHECK(term_to_string(T("f#(s(0),x)"), &names) == "f#(s(0),x)");
    CHECK(position_to_string(Position::root()) == "ε");
    CHECK(position_to_string(P({1, 2})) == "1.2");
}

TEST_CASE("term ordering is a strict total order on distinct terms") {
    TermGen gen(7);
    for (int i = 0; i < 100; ++i) {
        Term a = gen.term(2);
        Term b = gen.term(2);
        int ab = compare_terms(a, b);
        CHECK(ab == -compare_terms(b, a));
        CHECK((ab == 0) == (a == b));
    }
}
