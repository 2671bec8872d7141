#include "loopfinder/trs.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace loopfinder {

std::string ParseError::to_string() const {
    return std::to_string(line) + ":" + std::to_string(col) + ": " + message;
}

namespace {

enum class TokKind { LParen, RParen, Comma, Arrow, RelArrow, Ident, End };

struct Token {
    TokKind kind;
    std::string text;
    int line = 1;
    int col = 1;
};

bool is_delim(char c) {
    return c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            advance(c);
            ++i;
            continue;
        }
        int tl = line, tc = col;
        if (c == '(') {
            out.push_back({TokKind::LParen, "(", tl, tc});
            advance(c);
            ++i;
            continue;
        }
        if (c == ')') {
            out.push_back({TokKind::RParen, ")", tl, tc});
            advance(c);
            ++i;
            continue;
        }
        if (c == ',') {
            out.push_back({TokKind::Comma, ",", tl, tc});
            advance(c);
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !is_delim(text[i])) {
            advance(text[i]);
            ++i;
        }
        std::string run(text.substr(start, i - start));
        if (run == "->")
            out.push_back({TokKind::Arrow, run, tl, tc});
        else if (run == "->=")
            out.push_back({TokKind::RelArrow, run, tl, tc});
        else
            out.push_back({TokKind::Ident, run, tl, tc});
    }
    out.push_back({TokKind::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    ParseOutcome run() {
        while (peek().kind != TokKind::End) {
            if (!expect(TokKind::LParen, "expected '(' starting a section"))
                break;
            section();
            if (!errors_.empty())
                break;
        }
        if (!errors_.empty())
            return {std::nullopt, errors_};
        Trs trs;
        trs.rules = std::move(rules_);
        trs.signature = std::move(signature_);
        trs.var_names = std::move(names_);
        trs.first_free_var = next_var_;
        return {std::move(trs), {}};
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<ParseError> errors_;

    std::map<std::string, VarId> vars_;
    std::map<std::string, int> arity_;
    VarNames names_;
    VarId next_var_ = 0;
    std::set<Symbol> signature_;
    std::vector<Rule> rules_;

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    void error(const Token& at, std::string msg) {
        errors_.push_back({at.line, at.col, std::move(msg)});
    }

    bool expect(TokKind kind, const std::string& msg) {
        if (peek().kind != kind) {
            error(peek(), msg + " (got '" + peek().text + "')");
            return false;
        }
        take();
        return true;
    }

    void section() {
        const Token head = peek();
        if (head.kind != TokKind::Ident) {
            error(head, "expected a section name");
            return;
        }
        take();
        if (head.text == "VAR")
            var_section();
        else if (head.text == "RULES")
            rules_section();
        else if (head.text == "COMMENT")
            skip_balanced();
        else if (head.text == "STRATEGY")
            strategy_section(head);
        else if (head.text == "THEORY")
            error(head, "THEORY sections are not supported");
        else
            error(head, "unsupported section '" + head.text + "'");
    }

    void var_section() {
        while (peek().kind == TokKind::Ident) {
            Token t = take();
            if (arity_.count(t.text)) {
                error(t, "'" + t.text + "' is already used as a function symbol");
                return;
            }
            if (!vars_.count(t.text)) {
                VarId id = next_var_++;
                vars_[t.text] = id;
                names_.names[id] = t.text;
            }
        }
        expect(TokKind::RParen, "expected ')' closing VAR section");
    }

    void strategy_section(const Token& head) {
        if (peek().kind == TokKind::Ident && peek().text == "FULL") {
            take();
            expect(TokKind::RParen, "expected ')' closing STRATEGY section");
            return;
        }
        error(head, "only STRATEGY FULL is supported");
    }

    void skip_balanced() {
        int depth = 1;
        while (depth > 0) {
            Token t = take();
            if (t.kind == TokKind::End) {
                error(t, "unterminated section");
                return;
            }
            if (t.kind == TokKind::LParen)
                ++depth;
            else if (t.kind == TokKind::RParen)
                --depth;
        }
    }

    void rules_section() {
        while (errors_.empty() && peek().kind != TokKind::RParen && peek().kind != TokKind::End) {
            Token at = peek();
            std::optional<Term> lhs = term();
            if (!lhs)
                return;
            if (peek().kind == TokKind::RelArrow) {
                error(peek(), "relative rules (->=) are not supported");
                return;
            }
            if (!expect(TokKind::Arrow, "expected '->' in rule"))
                return;
            std::optional<Term> rhs = term();
            if (!rhs)
                return;
            if (lhs->is_var()) {
                error(at, "invalid rule '" + rule_to_string(Rule{*lhs, *rhs}, &names_) +
                              "': left-hand side is a variable");
                return;
            }
            std::vector<VarId> lv = term_vars(*lhs);
            for (VarId v : term_vars(*rhs)) {
                if (std::find(lv.begin(), lv.end(), v) == lv.end()) {
                    error(at, "invalid rule '" + rule_to_string(Rule{*lhs, *rhs}, &names_) +
                                  "': right-hand side variable " + names_.name_of(v) +
                                  " does not occur on the left");
                    return;
                }
            }
            rules_.push_back(Rule{std::move(*lhs), std::move(*rhs)});
        }
        expect(TokKind::RParen, "expected ')' closing RULES section");
    }

    std::optional<Term> term() {
        if (peek().kind != TokKind::Ident) {
            error(peek(), "expected a term (got '" + peek().text + "')");
            return std::nullopt;
        }
        Token head = take();
        auto var = vars_.find(head.text);
        if (peek().kind != TokKind::LParen) {
            if (var != vars_.end())
                return Term::var(var->second);
            return make_app(head, {});
        }
        if (var != vars_.end()) {
            error(head, "variable '" + head.text + "' used as a function symbol");
            return std::nullopt;
        }
        take();  // '('
        std::vector<Term> args;
        if (peek().kind != TokKind::RParen) {
            while (true) {
                std::optional<Term> arg = term();
                if (!arg)
                    return std::nullopt;
                args.push_back(std::move(*arg));
                if (peek().kind == TokKind::Comma) {
                    take();
                    continue;
                }
                break;
            }
        }
        if (!expect(TokKind::RParen, "expected ')' closing argument list"))
            return std::nullopt;
        return make_app(head, std::move(args));
    }

    std::optional<Term> make_app(const Token& head, std::vector<Term> args) {
        int arity = static_cast<int>(args.size());
        auto it = arity_.find(head.text);
        if (it == arity_.end()) {
            arity_[head.text] = arity;
        } else if (it->second != arity) {
            error(head, "symbol '" + head.text + "' used with arity " + std::to_string(arity) +
                            " but previously with arity " + std::to_string(it->second));
            return std::nullopt;
        }
        Symbol sym{head.text, arity, SymbolKind::Plain};
        signature_.insert(sym);
        return Term::app(std::move(sym), std::move(args));
    }
};

}  // namespace

ParseOutcome parse_trs(std::string_view text) {
    Parser p(text);
    return p.run();
}

std::string print_trs(const Trs& R) {
    std::ostringstream os;
    std::vector<std::pair<VarId, std::string>> vars(R.var_names.names.begin(),
                                                    R.var_names.names.end());
    std::sort(vars.begin(), vars.end());
    if (!vars.empty()) {
        os << "(VAR";
        for (const auto& [id, name] : vars)
            os << ' ' << name;
        os << ")\n";
    }
    os << "(RULES\n";
    for (const Rule& r : R.rules)
        os << "  " << rule_to_string(r, &R.var_names) << '\n';
    os << ")\n";
    return os.str();
}

std::set<Symbol> defined_symbols(const Trs& R) {
    std::set<Symbol> out;
    for (const Rule& r : R.rules)
        out.insert(r.lhs.sym());
    return out;
}

std::vector<FRule> dependency_pairs(const Trs& R) {
    std::set<Symbol> defined = defined_symbols(R);
    std::vector<FRule> out;
    std::set<FRule, FRuleLess> seen;
    for (const Rule& rule : R.rules) {
        for (const Position& p : positions(rule.rhs)) {
            Term sub = subterm_at(rule.rhs, p);
            if (sub.is_var() || !defined.count(sub.sym()))
                continue;
            FRule pair = mark_rule(Rule{rule.lhs, sub});
            if (seen.insert(canonical_rule(pair)).second)
                out.push_back(std::move(pair));
        }
    }
    return out;
}

std::vector<RewriteStep> successors(const Term& t, const Trs& R) {
    std::vector<RewriteStep> out;
    for (const Position& p : positions(t)) {
        Term sub = subterm_at(t, p);
        for (std::size_t i = 0; i < R.rules.size(); ++i) {
            auto theta = match(R.rules[i].lhs, sub);
            if (!theta)
                continue;
            out.push_back({p, static_cast<int>(i), replace_at(t, p, theta->apply(R.rules[i].rhs))});
        }
    }
    return out;
}

}  // namespace loopfinder
