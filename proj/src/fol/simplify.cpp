#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "alba/fol.hpp"

namespace alba {

namespace {

using F = FOFormula;

bool is_bool(const F& f, FOKind k) { return f.kind() == k; }
bool occurs_free(const F& f, const std::string& x) { return free_vars(f).count(x) > 0; }

// f[t/x]; nothing when a binder of t would capture a replaced occurrence
std::optional<F> subst(const F& f, const std::string& x, const std::string& t) {
    auto term = [&](const std::string& s) { return s == x ? t : s; };
    switch (f.kind()) {
        case FOKind::True:
        case FOKind::False: return f;
        case FOKind::Rel: return F::rel(term(f.a()), term(f.b()));
        case FOKind::RelP: return F::relp(term(f.a()), term(f.b()));
        case FOKind::Pred: return F::pred(f.name(), term(f.a()));
        case FOKind::Eq: return F::eq(term(f.a()), term(f.b()));
        case FOKind::Forall:
        case FOKind::Exists: {
            if (f.name() == x) return f;
            if (f.name() == t && occurs_free(f.child(0), x)) return std::nullopt;
            auto b = subst(f.child(0), x, t);
            if (!b) return std::nullopt;
            return f.kind() == FOKind::Forall ? F::forall(f.name(), *b) : F::exists(f.name(), *b);
        }
        case FOKind::Not: {
            auto a = subst(f.child(0), x, t);
            if (!a) return std::nullopt;
            return F::negation(*a);
        }
        default: {
            auto a = subst(f.child(0), x, t);
            auto b = subst(f.child(1), x, t);
            if (!a || !b) return std::nullopt;
            if (f.kind() == FOKind::And) return F::conjunction(*a, *b);
            if (f.kind() == FOKind::Or) return F::disjunction(*a, *b);
            return F::implication(*a, *b);
        }
    }
}

void conjuncts(const F& f, std::vector<F>& out) {
    if (f.kind() == FOKind::And) {
        conjuncts(f.child(0), out);
        conjuncts(f.child(1), out);
    } else {
        out.push_back(f);
    }
}

F conjoin(const std::vector<F>& cs) {
    if (cs.empty()) return F::truth();
    F out = cs.front();
    for (std::size_t k = 1; k < cs.size(); ++k) out = F::conjunction(out, cs[k]);
    return out;
}

// the other side of an equation x = t or t = x
std::optional<std::string> solves(const F& f, const std::string& x) {
    if (f.kind() != FOKind::Eq) return std::nullopt;
    if (f.a() == x && f.b() != x) return f.b();
    if (f.b() == x && f.a() != x) return f.a();
    return std::nullopt;
}

// Tries to remove x from a conjunction by one of its equations.
std::optional<std::vector<F>> resolve_equation(const std::vector<F>& cs, const std::string& x) {
    for (std::size_t k = 0; k < cs.size(); ++k) {
        auto t = solves(cs[k], x);
        if (!t) continue;
        std::vector<F> rest;
        bool ok = true;
        for (std::size_t n = 0; n < cs.size() && ok; ++n) {
            if (n == k) continue;
            auto s = subst(cs[n], x, *t);
            if (!s)
                ok = false;
            else
                rest.push_back(*s);
        }
        if (ok) return rest;
    }
    return std::nullopt;
}

F step(const F& f);

F simp_not(const F& a) {
    if (is_bool(a, FOKind::True)) return F::falsity();
    if (is_bool(a, FOKind::False)) return F::truth();
    if (a.kind() == FOKind::Not) return a.child(0);
    return F::negation(a);
}

F simp_and(const F& a, const F& b) {
    if (is_bool(a, FOKind::False) || is_bool(b, FOKind::False)) return F::falsity();
    if (is_bool(a, FOKind::True)) return b;
    if (is_bool(b, FOKind::True)) return a;
    if (a == b) return a;
    return F::conjunction(a, b);
}

F simp_or(const F& a, const F& b) {
    if (is_bool(a, FOKind::True) || is_bool(b, FOKind::True)) return F::truth();
    if (is_bool(a, FOKind::False)) return b;
    if (is_bool(b, FOKind::False)) return a;
    if (a == b) return a;
    return F::disjunction(a, b);
}

F simp_imp(const F& a, const F& b) {
    if (is_bool(a, FOKind::False) || is_bool(b, FOKind::True)) return F::truth();
    if (is_bool(a, FOKind::True)) return b;
    if (is_bool(b, FOKind::False)) return simp_not(a);
    if (a == b) return F::truth();
    if (a.kind() == FOKind::Not && b.kind() == FOKind::Not) return F::implication(b.child(0), a.child(0));
    return F::implication(a, b);
}

F simp_forall(const std::string& x, const F& body) {
    if (!occurs_free(body, x)) return body;
    if (body.kind() == FOKind::Imp) {
        const F& a = body.child(0);
        const F& c = body.child(1);
        std::vector<F> cs;
        conjuncts(a, cs);
        // forall x (x = t & A -> C)  ~>  A[t/x] -> C[t/x]
        for (std::size_t k = 0; k < cs.size(); ++k) {
            auto t = solves(cs[k], x);
            if (!t) continue;
            std::vector<F> all = cs;
            all.erase(all.begin() + static_cast<std::ptrdiff_t>(k));
            auto ra = subst(conjoin(all), x, *t);
            auto rc = subst(c, x, *t);
            if (ra && rc) return simp_imp(*ra, *rc);
        }
        // forall x (A -> ~(x = t))  ~>  ~A[t/x]
        if (c.kind() == FOKind::Not)
            if (auto t = solves(c.child(0), x))
                if (auto ra = subst(a, x, *t)) return simp_not(*ra);
        // forall x (B & exists y A -> C)  ~>  forall x forall y (B & A -> C)
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (cs[k].kind() != FOKind::Exists) continue;
            const std::string& y = cs[k].name();
            bool clash = y == x || occurs_free(c, y);
            for (std::size_t n = 0; n < cs.size() && !clash; ++n)
                if (n != k && occurs_free(cs[n], y)) clash = true;
            if (clash) continue;
            std::vector<F> all = cs;
            all[k] = cs[k].child(0);
            return F::forall(x, F::forall(y, F::implication(conjoin(all), c)));
        }
    }
    return F::forall(x, body);
}

F simp_exists(const std::string& x, const F& body) {
    if (!occurs_free(body, x)) return body;
    std::vector<F> cs;
    conjuncts(body, cs);
    if (auto rest = resolve_equation(cs, x)) return conjoin(*rest);
    return F::exists(x, body);
}

F step(const F& f) {
    switch (f.kind()) {
        case FOKind::Eq: return f.a() == f.b() ? F::truth() : f;
        case FOKind::Not: return simp_not(step(f.child(0)));
        case FOKind::And: return simp_and(step(f.child(0)), step(f.child(1)));
        case FOKind::Or: return simp_or(step(f.child(0)), step(f.child(1)));
        case FOKind::Imp: return simp_imp(step(f.child(0)), step(f.child(1)));
        case FOKind::Forall: return simp_forall(f.name(), step(f.child(0)));
        case FOKind::Exists: return simp_exists(f.name(), step(f.child(0)));
        default: return f;
    }
}

std::string canonical(std::size_t k) {
    static const char* base[] = {"w", "v", "u", "t", "s", "r"};
    std::string s = base[k % 6];
    if (k >= 6) s += std::to_string(k / 6);
    return s;
}

}  // namespace

FOFormula canonical_bound_names(const FOFormula& f) {
    std::set<std::string> taken = free_vars(f);
    std::size_t next = 0;
    auto fresh = [&] {
        while (true) {
            std::string s = canonical(next++);
            if (!taken.count(s)) return s;
        }
    };
    // every binder gets a new name, so nothing can be captured
    std::function<F(const F&, const std::map<std::string, std::string>&)> go =
        [&](const F& g, const std::map<std::string, std::string>& env) -> F {
        auto term = [&](const std::string& s) {
            auto it = env.find(s);
            return it == env.end() ? s : it->second;
        };
        switch (g.kind()) {
            case FOKind::True:
            case FOKind::False: return g;
            case FOKind::Rel: return F::rel(term(g.a()), term(g.b()));
            case FOKind::RelP: return F::relp(term(g.a()), term(g.b()));
            case FOKind::Pred: return F::pred(g.name(), term(g.a()));
            case FOKind::Eq: return F::eq(term(g.a()), term(g.b()));
            case FOKind::Not: return F::negation(go(g.child(0), env));
            case FOKind::And: {
                F a = go(g.child(0), env);
                return F::conjunction(a, go(g.child(1), env));
            }
            case FOKind::Or: {
                F a = go(g.child(0), env);
                return F::disjunction(a, go(g.child(1), env));
            }
            case FOKind::Imp: {
                F a = go(g.child(0), env);
                return F::implication(a, go(g.child(1), env));
            }
            default: {
                std::string n = fresh();
                auto inner = env;
                inner[g.name()] = n;
                F b = go(g.child(0), inner);
                return g.kind() == FOKind::Forall ? F::forall(n, b) : F::exists(n, b);
            }
        }
    };
    return go(f, {});
}

FOFormula simplify_fo(const FOFormula& f) {
    F cur = f;
    for (int round = 0; round < 64; ++round) {
        F next = step(cur);
        if (next == cur) break;
        cur = next;
    }
    return canonical_bound_names(cur);
}

}  // namespace alba
