#pragma once
// Strategy pieces shared by the quasi engine and the first half of the Pi2 engine.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "alba/engine.hpp"
#include "alba/syntax.hpp"

namespace alba::detail {

using Ineqs = std::vector<Inequality>;

// first counter value whose "_k" names are unused in q
inline int fresh_floor(const Ineqs& is) {
    int k = 0;
    for (const auto& n : analyze_vocabulary(is).nominals) {
        if (n.size() < 2 || n[0] != '_') continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(n.substr(1), &used);
            if (used + 1 == n.size()) k = std::max(k, v + 1);
        } catch (const std::exception&) {
        }
    }
    return k;
}

inline Ineqs all_of(const QuasiInequality& q) {
    Ineqs out = q.antecedent;
    out.insert(out.end(), q.consequent.begin(), q.consequent.end());
    return out;
}

// --- Stage 1 ---------------------------------------------------------------

struct Pre {
    DerivationTrace* trace;
    int half;

    void log(const char* rule, Ineqs consumed, Ineqs produced) {
        if (!trace) return;
        TraceStep s;
        s.stage = "preprocess";
        s.rule = rule;
        s.half = half;
        s.consumed = std::move(consumed);
        s.produced = std::move(produced);
        trace->add(std::move(s));
    }

    Ineqs distribute_all(const Ineqs& is) {
        Ineqs out;
        for (const auto& i : is) {
            Inequality d{distribute(i.lhs, Sign::Plus), i.rel, distribute(i.rhs, Sign::Minus)};
            if (d != i) log("distribute", {i}, {d});
            out.push_back(d);
        }
        return out;
    }

    Ineqs split_all(const Ineqs& is) {
        Ineqs out;
        std::vector<Inequality> work(is.rbegin(), is.rend());
        while (!work.empty()) {
            Inequality i = work.back();
            work.pop_back();
            if (i.lhs.op() == Op::Or) {
                Inequality a{i.lhs.child(0), i.rel, i.rhs}, b{i.lhs.child(1), i.rel, i.rhs};
                log("split-join", {i}, {a, b});
                work.push_back(b);
                work.push_back(a);
            } else if (i.rhs.op() == Op::And) {
                Inequality a{i.lhs, i.rel, i.rhs.child(0)}, b{i.lhs, i.rel, i.rhs.child(1)};
                log("split-meet", {i}, {a, b});
                work.push_back(b);
                work.push_back(a);
            } else {
                out.push_back(i);
            }
        }
        return out;
    }

    Ineqs rewrite_prec(const Ineqs& is) {
        Ineqs out;
        for (const auto& i : is) {
            if (i.rel == Rel::Prec) {
                Inequality r = leq(sdia(i.lhs), i.rhs);
                log("prec-rewrite", {i}, {r});
                out.push_back(r);
            } else {
                out.push_back(i);
            }
        }
        return out;
    }
};

inline bool has_critical(Sign s, const Formula& f, const OrderType& eps) { return !critical_branches(s, f, eps).empty(); }

inline bool lhs_critical(const Formula& f, const OrderType& eps) { return has_critical(Sign::Minus, f, eps); }
inline bool rhs_critical(const Formula& f, const OrderType& eps) { return has_critical(Sign::Plus, f, eps); }

inline bool is_neg_nominal(const Formula& f) { return f.op() == Op::Not && f.child(0).op() == Op::Nom; }

inline Rule box_res(Op op) {
    switch (op) {
        case Op::Box: return Rule::BoxRes;
        case Op::SBox: return Rule::SBoxRes;
        case Op::BBox: return Rule::BBoxRes;
        default: return Rule::SBBoxRes;
    }
}

inline Rule dia_res(Op op) {
    switch (op) {
        case Op::Dia: return Rule::DiaRes;
        case Op::SDia: return Rule::SDiaRes;
        case Op::BDia: return Rule::BDiaRes;
        default: return Rule::SBDiaRes;
    }
}

// Rule for the goal-side pass: approximate, split and move negations along
// inequalities of shape @i <= a or b <= ~@i.
inline std::optional<Rule> goal_rule(const Inequality& i) {
    if (is_pure(i)) return std::nullopt;
    if (i.lhs.op() == Op::Nom) {
        Op op = i.rhs.op();
        if (op == Op::Not) return Rule::NegResRight;
        if (is_diamond(op) && !is_pure(i.rhs.child(0))) return Rule::ApproxDia;
        if (op == Op::And) return Rule::SplitMeet;
        return std::nullopt;
    }
    if (is_neg_nominal(i.rhs)) {
        Op op = i.lhs.op();
        if (op == Op::Not) return Rule::NegResLeft;
        if (is_box(op) && !is_pure(i.lhs.child(0))) return Rule::ApproxBox;
        if (op == Op::Or) return Rule::SplitJoin;
        if (op == Op::Imp) return Rule::ApproxImp;
    }
    return std::nullopt;
}

// Rule that moves one inequality towards theta <= p (eps 1) or p <= theta (eps d).
inline std::optional<Rule> solve_rule(const Inequality& i, const OrderType& eps) {
    if (is_pure(i)) return std::nullopt;
    bool lc = lhs_critical(i.lhs, eps), rc = rhs_critical(i.rhs, eps);
    if (lc == rc) return std::nullopt;
    if (rc) {
        const Formula& b = i.rhs;
        Op op = b.op();
        if (op == Op::Var) return std::nullopt;
        if (op == Op::Not) return Rule::NegResRight;
        if (is_box(op)) return box_res(op);
        if (op == Op::And) return Rule::SplitMeet;
        if (op == Op::Or) return rhs_critical(b.child(1), eps) ? Rule::OrRes1 : Rule::OrRes2;
        if (op == Op::Imp) return rhs_critical(b.child(1), eps) ? Rule::ImpRes1 : Rule::ImpRes2;
        if (is_diamond(op) && i.lhs.op() == Op::Nom) return Rule::ApproxDia;
        return std::nullopt;
    }
    const Formula& a = i.lhs;
    Op op = a.op();
    if (op == Op::Var) return std::nullopt;
    if (op == Op::Not) return Rule::NegResLeft;
    if (is_diamond(op)) return dia_res(op);
    if (op == Op::Or) return Rule::SplitJoin;
    if (op == Op::And) return lhs_critical(a.child(0), eps) ? Rule::AndRes1 : Rule::AndRes2;
    if (is_box(op) && is_neg_nominal(i.rhs)) return Rule::ApproxBox;
    if (op == Op::Imp && is_neg_nominal(i.rhs)) return Rule::ApproxImp;
    return std::nullopt;
}

struct Runner {
    DerivationTrace& trace;
    int member;
    int half;
    System sys;

    void step(const char* stage, const std::string& rule, std::vector<std::size_t> premises, Ineqs produced,
              std::vector<std::string> fresh) {
        TraceStep t;
        t.stage = stage;
        t.rule = rule;
        t.member = member;
        t.half = half;
        for (std::size_t k : premises) t.consumed.push_back(sys.inequalities[k]);
        t.premises = std::move(premises);
        t.produced = std::move(produced);
        t.fresh = std::move(fresh);
        trace.add(std::move(t));
    }

    void apply(Rule r, std::size_t k) {
        System next = apply_rule(sys, {r, k});
        std::vector<std::string> fresh;
        for (int n = sys.fresh_counter; n < next.fresh_counter; ++n) fresh.push_back("_" + std::to_string(n));
        std::size_t produced = next.inequalities.size() + 1 - sys.inequalities.size();
        Ineqs out(next.inequalities.begin() + static_cast<std::ptrdiff_t>(k),
                  next.inequalities.begin() + static_cast<std::ptrdiff_t>(k + produced));
        step("reduction", rule_name(r), {k}, std::move(out), std::move(fresh));
        sys = std::move(next);
    }

    // first inequality with an applicable rule, if any
    template <class F>
    bool pass(F pick) {
        for (std::size_t k = 0; k < sys.inequalities.size(); ++k)
            if (auto r = pick(sys.inequalities[k])) {
                apply(*r, k);
                return true;
            }
        return false;
    }

    void goal_side() {
        while (pass(goal_rule)) {
        }
    }

    void solve(const OrderType& eps) {
        while (pass([&](const Inequality& i) { return solve_rule(i, eps); })) {
        }
    }

    bool eliminate_var(const std::string& p, Side side) {
        AckermannCheck c = ackermann_precondition(sys.inequalities, p, side);
        if (!c.ok) return false;
        Ineqs after = ackermann(sys.inequalities, p, side);
        std::vector<std::size_t> consumed = c.bounds;
        consumed.insert(consumed.end(), c.affected.begin(), c.affected.end());
        std::sort(consumed.begin(), consumed.end());
        Ineqs produced;
        for (std::size_t n = 0; n < c.affected.size(); ++n) produced.push_back(after[consumed.front() + n]);
        step("ackermann", std::string("ackermann-") + to_string(side) + "(" + p + ")", consumed, produced, {});
        sys.inequalities = std::move(after);
        return true;
    }

    std::set<std::string> remaining() const { return analyze_vocabulary(sys.inequalities).prop_vars; }
};

inline Side preferred(const OrderType& eps, const std::string& p) {
    return eps.has(p) && eps.at(p) == Polarity::Partial ? Side::Left : Side::Right;
}

}  // namespace alba::detail
