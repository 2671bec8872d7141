#pragma once

// Term construction helpers for tests: a small reader for terms written the
// way the pretty-printer emits them, e.g. "f#(s(0),s(1),x)". Identifiers
// listed in the variable set become variables with fixed ids (position in
// the list); everything else is a function symbol, with a trailing '#'
// marking a tuple symbol.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopfinder/depgraph.hpp"
#include "loopfinder/rule.hpp"
#include "loopfinder/term.hpp"

namespace testsupport {

using namespace loopfinder;

inline const std::vector<std::string>& default_vars() {
    static const std::vector<std::string> vars = {"x", "y", "z", "w"};
    return vars;
}

class TermReader {
public:
    TermReader(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Term read() {
        Term t = term();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("trailing input in term: " + text_);
        return t;
    }

private:
    std::string text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && text_[pos_] == ' ')
            ++pos_;
    }

    Term term() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
               text_[pos_] != ',' && text_[pos_] != ' ')
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name.empty())
            throw std::invalid_argument("empty identifier in term: " + text_);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name)
                return Term::var(static_cast<VarId>(i));
        SymbolKind kind = SymbolKind::Plain;
        if (name.back() == '#') {
            kind = SymbolKind::Tuple;
            name.pop_back();
        }
        std::vector<Term> args;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            while (true) {
                args.push_back(term());
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw std::invalid_argument("missing ')' in term: " + text_);
            ++pos_;
        }
        int arity = static_cast<int>(args.size());
        return Term::app(Symbol{name, arity, kind}, std::move(args));
    }
};

inline Term T(const std::string& text, const std::vector<std::string>& vars = default_vars()) {
    return TermReader(text, vars).read();
}

inline FRule FR(const std::string& lhs, const std::string& rhs,
                const std::vector<std::string>& vars = default_vars()) {
    return FRule{T(lhs, vars), T(rhs, vars)};
}

inline SyntacticLoop Loop(std::vector<FRule> rules) {
    return SyntacticLoop{std::move(rules)};
}

inline Position P(std::initializer_list<int> steps) {
    Position p;
    p.steps = steps;
    return p;
}

}  // namespace testsupport
