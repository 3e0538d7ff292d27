#include <cctype>
#include <vector>

#include "alba/fol.hpp"
#include "alba/syntax.hpp"

namespace alba {

namespace {

using F = FOFormula;

bool quantifier(const F& f) { return f.kind() == FOKind::Forall || f.kind() == FOKind::Exists; }

int level(const F& f) {
    switch (f.kind()) {
        case FOKind::Imp: return 1;
        case FOKind::Or: return 2;
        case FOKind::And: return 3;
        case FOKind::Forall:
        case FOKind::Exists: return 0;
        default: return 4;
    }
}

std::string show(const F& f);

std::string wrap(const F& f, int need) {
    std::string s = show(f);
    return level(f) < need ? "(" + s + ")" : s;
}

std::string show(const F& f) {
    switch (f.kind()) {
        case FOKind::True: return "true";
        case FOKind::False: return "false";
        case FOKind::Rel: return "R(" + f.a() + "," + f.b() + ")";
        case FOKind::RelP: return "R'(" + f.a() + "," + f.b() + ")";
        case FOKind::Pred: return "P_" + f.name() + "(" + f.a() + ")";
        case FOKind::Eq: return f.a() + " = " + f.b();
        case FOKind::Not:
            if (f.child(0).kind() == FOKind::Eq) return "~(" + show(f.child(0)) + ")";
            return "~" + wrap(f.child(0), 4);
        case FOKind::And: return wrap(f.child(0), 3) + " & " + wrap(f.child(1), 4);
        case FOKind::Or: return wrap(f.child(0), 2) + " | " + wrap(f.child(1), 3);
        case FOKind::Imp: return wrap(f.child(0), 2) + " -> " + wrap(f.child(1), 1);
        default: {
            // a block of equal quantifiers shares one keyword
            std::string s = f.kind() == FOKind::Forall ? "forall" : "exists";
            F cur = f;
            while (cur.kind() == f.kind()) {
                s += " " + cur.name();
                cur = cur.child(0);
            }
            std::string body = show(cur);
            if (level(cur) < 4 && !quantifier(cur)) body = "(" + body + ")";
            return s + ". " + body;
        }
    }
}

std::string sx(const F& f) {
    switch (f.kind()) {
        case FOKind::True: return "true";
        case FOKind::False: return "false";
        case FOKind::Rel: return "(R " + f.a() + " " + f.b() + ")";
        case FOKind::RelP: return "(R' " + f.a() + " " + f.b() + ")";
        case FOKind::Pred: return "(P " + f.name() + " " + f.a() + ")";
        case FOKind::Eq: return "(= " + f.a() + " " + f.b() + ")";
        case FOKind::Not: return "(not " + sx(f.child(0)) + ")";
        case FOKind::And: return "(and " + sx(f.child(0)) + " " + sx(f.child(1)) + ")";
        case FOKind::Or: return "(or " + sx(f.child(0)) + " " + sx(f.child(1)) + ")";
        case FOKind::Imp: return "(-> " + sx(f.child(0)) + " " + sx(f.child(1)) + ")";
        case FOKind::Forall: return "(forall " + f.name() + " " + sx(f.child(0)) + ")";
        default: return "(exists " + f.name() + " " + sx(f.child(0)) + ")";
    }
}

struct Tok {
    std::string text;  // "" at the end
    bool ident;
    int line, col;
};

std::vector<Tok> lex(std::string_view s) {
    std::vector<Tok> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto adv = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            adv(1);
            continue;
        }
        int l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
                ++j;
            std::string t(s.substr(i, j - i));
            if (t[0] == '@') t = t.substr(1);
            out.push_back({t, true, l, cl});
            adv(j - i);
            continue;
        }
        if (s.substr(i, 2) == "->") {
            out.push_back({"->", false, l, cl});
            adv(2);
            continue;
        }
        if (std::string("()~&|.,=").find(c) != std::string::npos) {
            out.push_back({std::string(1, c), false, l, cl});
            adv(1);
            continue;
        }
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({"", false, line, col});
    return out;
}

struct Parser {
    std::vector<Tok> toks;
    std::size_t pos = 0;

    const Tok& peek() const { return toks[pos]; }
    bool at(const char* s) const { return !peek().ident && peek().text == s; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Tok& t = peek();
        throw ParseError(t.line, t.col,
                         t.text.empty() ? "syntax error at end of input: " + msg : "syntax error at '" + t.text + "': " + msg);
    }
    void expect(const char* s) {
        if (!at(s)) fail(std::string("expected '") + s + "'");
        ++pos;
    }
    std::string name() {
        if (!peek().ident) fail("expected a variable");
        return toks[pos++].text;
    }

    F imp() {
        F a = disj();
        if (at("->")) {
            ++pos;
            return F::implication(a, imp());
        }
        return a;
    }
    F disj() {
        F a = conj();
        while (at("|")) {
            ++pos;
            a = F::disjunction(a, conj());
        }
        return a;
    }
    F conj() {
        F a = unary();
        while (at("&")) {
            ++pos;
            a = F::conjunction(a, unary());
        }
        return a;
    }
    F unary() {
        if (at("~")) {
            ++pos;
            return F::negation(unary());
        }
        if (at("(")) {
            ++pos;
            F a = imp();
            expect(")");
            return a;
        }
        if (!peek().ident) fail("expected a formula");
        std::string t = peek().text;
        if (t == "forall" || t == "exists") {
            ++pos;
            std::vector<std::string> vars;
            while (peek().ident) vars.push_back(name());
            if (vars.empty()) fail("expected a bound variable");
            expect(".");
            F body = imp();
            for (auto it = vars.rbegin(); it != vars.rend(); ++it)
                body = t == "forall" ? F::forall(*it, body) : F::exists(*it, body);
            return body;
        }
        if (t == "true" || t == "T") {
            ++pos;
            return F::truth();
        }
        if (t == "false" || t == "F") {
            ++pos;
            return F::falsity();
        }
        ++pos;
        if (at("(")) {
            ++pos;
            std::string x = name();
            if (t == "R" || t == "R'") {
                expect(",");
                std::string y = name();
                expect(")");
                return t == "R" ? F::rel(x, y) : F::relp(x, y);
            }
            expect(")");
            if (t.size() > 2 && t.compare(0, 2, "P_") == 0) return F::pred(t.substr(2), x);
            --pos;
            fail("unknown predicate " + t);
        }
        expect("=");
        return F::eq(t, name());
    }
};

}  // namespace

std::string render(const FOFormula& f) { return show(f); }
std::string to_sexpr(const FOFormula& f) { return sx(f); }

FOFormula parse_fo(std::string_view text) {
    Parser p{lex(text)};
    F f = p.imp();
    if (!p.peek().text.empty()) p.fail("unexpected trailing input");
    return f;
}

}  // namespace alba
