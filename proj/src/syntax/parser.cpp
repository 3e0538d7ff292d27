#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "alba/syntax.hpp"

namespace alba {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Nominal, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        int l = line, cl = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        if (c == '@') {
            std::size_t j = i + 1;
            if (j >= s.size() || !ident_start(s[j])) throw ParseError(l, cl, "expected a name after '@'");
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Tok::Nominal, std::string(s.substr(i + 1, j - i - 1)), l, cl});
            advance(j - i);
            continue;
        }
        static const char* two[] = {"/\\", "\\/", "->", "<=", "=>"};
        bool matched = false;
        for (const char* t : two) {
            if (s.substr(i, 2) == t) {
                out.push_back({Tok::Sym, t, l, cl});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (c == '~' || c == '&' || c == '.' || c == '(' || c == ')') {
            out.push_back({Tok::Sym, std::string(1, c), l, cl});
            advance(1);
            continue;
        }
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const std::set<std::string>& reserved() {
    static const std::set<std::string> r = {"T",    "F",    "E",    "box",  "dia",   "sbox",
                                            "sdia", "bbox", "bdia", "sbbox", "sbdia", "prec"};
    return r;
}

std::optional<Op> prefix_op(const std::string& w) {
    static const std::pair<const char*, Op> table[] = {
        {"box", Op::Box},   {"dia", Op::Dia},   {"sbox", Op::SBox},   {"sdia", Op::SDia},
        {"bbox", Op::BBox}, {"bdia", Op::BDia}, {"sbbox", Op::SBBox}, {"sbdia", Op::SBDia}};
    for (const auto& [k, op] : table)
        if (w == k) return op;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Statement statement() {
        std::vector<Inequality> left = ineqs();
        if (!is_sym("=>")) {
            expect_end();
            if (left.size() == 1) return left.front();
            return MetaConjunction{std::move(left)};
        }
        ++pos_;
        if (is_ident("E")) {
            ++pos_;
            Pi2Statement s;
            s.antecedent = std::move(left);
            while (peek().kind == Tok::Ident && !is_sym(".")) {
                const Token& t = peek();
                if (reserved().count(t.text)) throw error(t, "reserved word '" + t.text + "' cannot be bound");
                for (const auto& b : s.bound)
                    if (b == t.text) throw error(t, "variable '" + t.text + "' bound twice");
                s.bound.push_back(t.text);
                ++pos_;
            }
            if (s.bound.empty()) throw error(peek(), "expected a bound variable after 'E'");
            expect_sym(".");
            s.consequent = exists_body();
            expect_end();
            for (const auto& b : s.bound)
                for (const auto& i : s.antecedent)
                    if (contains_var(i, b))
                        throw ParseError(toks_.front().line, toks_.front().col,
                                         "bound variable '" + b + "' occurs in the antecedent");
            return s;
        }
        QuasiInequality q;
        q.antecedent = std::move(left);
        q.consequent = ineqs();
        expect_end();
        return q;
    }

    Formula formula_only() {
        Formula f = formula();
        expect_end();
        return f;
    }

    Inequality inequality_only() {
        Inequality i = inequality();
        expect_end();
        return i;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool is_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }

    static ParseError error(const Token& t, const std::string& msg) {
        if (t.kind == Tok::End) return ParseError(t.line, t.col, "syntax error at end of input: " + msg);
        return ParseError(t.line, t.col, "syntax error at '" + t.text + "': " + msg);
    }

    void expect_sym(const char* s) {
        if (!is_sym(s)) throw error(peek(), std::string("expected '") + s + "'");
        ++pos_;
    }

    void expect_end() {
        if (peek().kind != Tok::End) throw error(peek(), "expected end of input");
    }

    // "E c. ( ... )" with the parentheses optional; a formula may also start with '('
    std::vector<Inequality> exists_body() {
        if (is_sym("(")) {
            std::size_t save = pos_;
            try {
                ++pos_;
                std::vector<Inequality> body = ineqs();
                expect_sym(")");
                if (peek().kind == Tok::End) return body;
            } catch (const ParseError&) {
            }
            pos_ = save;
        }
        return ineqs();
    }

    std::vector<Inequality> ineqs() {
        std::vector<Inequality> out;
        out.push_back(inequality());
        while (is_sym("&")) {
            ++pos_;
            out.push_back(inequality());
        }
        return out;
    }

    Inequality inequality() {
        Formula a = formula();
        Rel rel;
        if (is_sym("<=")) {
            rel = Rel::Leq;
        } else if (is_ident("prec")) {
            rel = Rel::Prec;
        } else {
            throw error(peek(), "expected '<=' or 'prec'");
        }
        ++pos_;
        Formula b = formula();
        return {a, rel, b};
    }

    Formula formula() {
        Formula a = disjunction();
        if (is_sym("->")) {
            ++pos_;
            return imp(a, formula());
        }
        return a;
    }

    Formula disjunction() {
        Formula a = conjunction();
        while (is_sym("\\/")) {
            ++pos_;
            a = disj(a, conjunction());
        }
        return a;
    }

    Formula conjunction() {
        Formula a = prefix();
        while (is_sym("/\\")) {
            ++pos_;
            a = conj(a, prefix());
        }
        return a;
    }

    Formula prefix() {
        const Token& t = peek();
        if (t.kind == Tok::Sym && t.text == "~") {
            ++pos_;
            return neg(prefix());
        }
        if (t.kind == Tok::Sym && t.text == "(") {
            ++pos_;
            Formula f = formula();
            expect_sym(")");
            return f;
        }
        if (t.kind == Tok::Nominal) {
            ++pos_;
            return Formula::nom(t.text);
        }
        if (t.kind == Tok::Ident) {
            if (auto op = prefix_op(t.text)) {
                ++pos_;
                return Formula::make(*op, prefix());
            }
            if (t.text == "T") {
                ++pos_;
                return Formula::top();
            }
            if (t.text == "F") {
                ++pos_;
                return Formula::bot();
            }
            if (reserved().count(t.text)) throw error(t, "unexpected keyword");
            ++pos_;
            return Formula::var(t.text);
        }
        throw error(t, "expected a formula");
    }
};

}  // namespace

Statement parse_statement(std::string_view text) { return Parser(text).statement(); }

Formula parse_formula(std::string_view text) { return Parser(text).formula_only(); }

Inequality parse_inequality(std::string_view text) { return Parser(text).inequality_only(); }

QuasiInequality parse_quasi(std::string_view text) {
    Statement s = parse_statement(text);
    if (auto* q = std::get_if<QuasiInequality>(&s)) return *q;
    if (auto* i = std::get_if<Inequality>(&s)) return normalize(QuasiInequality{{}, {*i}});
    if (auto* m = std::get_if<MetaConjunction>(&s)) return normalize(QuasiInequality{{}, m->items});
    throw ParseError(1, 1, "expected a quasi-inequality, found a Pi2 statement");
}

}  // namespace alba
