#include "alba/rules.hpp"

#include <algorithm>
#include <stdexcept>

#include "alba/syntax.hpp"
#include "alba/trees.hpp"

namespace alba {

namespace {

struct RuleInfo {
    Rule rule;
    const char* name;
    int fresh;
};

constexpr RuleInfo kRules[] = {
    {Rule::DiaRes, "dia-res", 0},
    {Rule::BoxRes, "box-res", 0},
    {Rule::SDiaRes, "sdia-res", 0},
    {Rule::SBoxRes, "sbox-res", 0},
    {Rule::BDiaRes, "bdia-res", 0},
    {Rule::BBoxRes, "bbox-res", 0},
    {Rule::SBDiaRes, "sbdia-res", 0},
    {Rule::SBBoxRes, "sbbox-res", 0},
    {Rule::NegResLeft, "neg-res-left", 0},
    {Rule::NegResRight, "neg-res-right", 0},
    {Rule::AndRes1, "and-res-1", 0},
    {Rule::AndRes2, "and-res-2", 0},
    {Rule::OrRes1, "or-res-1", 0},
    {Rule::OrRes2, "or-res-2", 0},
    {Rule::ImpRes1, "imp-res-1", 0},
    {Rule::ImpRes2, "imp-res-2", 0},
    {Rule::SplitMeet, "split-meet", 0},
    {Rule::SplitJoin, "split-join", 0},
    {Rule::ApproxDia, "approx-diamond", 1},
    {Rule::ApproxBox, "approx-box", 1},
    {Rule::ApproxImp, "approx-imp", 2},
};

// left adjoint diamond of a box and right adjoint box of a diamond
Op adjoint(Op op) {
    switch (op) {
        case Op::Dia: return Op::BBox;
        case Op::SDia: return Op::SBBox;
        case Op::BDia: return Op::Box;
        case Op::SBDia: return Op::SBox;
        case Op::Box: return Op::BDia;
        case Op::SBox: return Op::SBDia;
        case Op::BBox: return Op::Dia;
        case Op::SBBox: return Op::SDia;
        default: throw std::logic_error("adjoint: not a modal operator");
    }
}

std::optional<Op> residuated_diamond(Rule r) {
    switch (r) {
        case Rule::DiaRes: return Op::Dia;
        case Rule::SDiaRes: return Op::SDia;
        case Rule::BDiaRes: return Op::BDia;
        case Rule::SBDiaRes: return Op::SBDia;
        default: return std::nullopt;
    }
}

std::optional<Op> residuated_box(Rule r) {
    switch (r) {
        case Rule::BoxRes: return Op::Box;
        case Rule::SBoxRes: return Op::SBox;
        case Rule::BBoxRes: return Op::BBox;
        case Rule::SBBoxRes: return Op::SBBox;
        default: return std::nullopt;
    }
}

using Ineqs = std::vector<Inequality>;

}  // namespace

const char* rule_name(Rule r) {
    for (const auto& info : kRules)
        if (info.rule == r) return info.name;
    return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
    for (const auto& info : kRules)
        if (name == info.name) return info.rule;
    return std::nullopt;
}

int fresh_count(Rule r) {
    for (const auto& info : kRules)
        if (info.rule == r) return info.fresh;
    return 0;
}

Formula negate(const Formula& f) { return neg_smart(f); }

const char* to_string(Side s) { return s == Side::Right ? "right" : "left"; }

std::optional<Ineqs> apply_local(Rule r, const Inequality& i, const std::vector<std::string>& fresh) {
    if (i.rel != Rel::Leq) return std::nullopt;
    if (static_cast<int>(fresh.size()) < fresh_count(r))
        throw std::invalid_argument(std::string(rule_name(r)) + ": missing fresh nominals");
    const Formula& a = i.lhs;
    const Formula& b = i.rhs;
    if (auto d = residuated_diamond(r)) {
        if (a.op() != *d) return std::nullopt;
        return Ineqs{leq(a.child(0), Formula::make(adjoint(*d), b))};
    }
    if (auto bx = residuated_box(r)) {
        if (b.op() != *bx) return std::nullopt;
        return Ineqs{leq(Formula::make(adjoint(*bx), a), b.child(0))};
    }
    switch (r) {
        case Rule::NegResLeft:
            if (a.op() != Op::Not) return std::nullopt;
            return Ineqs{leq(negate(b), a.child(0))};
        case Rule::NegResRight:
            if (b.op() != Op::Not) return std::nullopt;
            return Ineqs{leq(b.child(0), negate(a))};
        case Rule::AndRes1:
            if (a.op() != Op::And) return std::nullopt;
            return Ineqs{leq(a.child(0), imp(a.child(1), b))};
        case Rule::AndRes2:
            if (a.op() != Op::And) return std::nullopt;
            return Ineqs{leq(a.child(1), imp(a.child(0), b))};
        case Rule::OrRes1:
            if (b.op() != Op::Or) return std::nullopt;
            return Ineqs{leq(conj(a, negate(b.child(0))), b.child(1))};
        case Rule::OrRes2:
            if (b.op() != Op::Or) return std::nullopt;
            return Ineqs{leq(conj(a, negate(b.child(1))), b.child(0))};
        case Rule::ImpRes1:
            if (b.op() != Op::Imp) return std::nullopt;
            return Ineqs{leq(conj(a, b.child(0)), b.child(1))};
        case Rule::ImpRes2:
            if (b.op() != Op::Imp) return std::nullopt;
            return Ineqs{leq(b.child(0), imp(a, b.child(1)))};
        case Rule::SplitMeet:
            if (b.op() != Op::And) return std::nullopt;
            return Ineqs{leq(a, b.child(0)), leq(a, b.child(1))};
        case Rule::SplitJoin:
            if (a.op() != Op::Or) return std::nullopt;
            return Ineqs{leq(a.child(0), b), leq(a.child(1), b)};
        case Rule::ApproxDia: {
            if (a.op() != Op::Nom || !is_diamond(b.op())) return std::nullopt;
            Formula j = Formula::nom(fresh[0]);
            return Ineqs{leq(j, b.child(0)), leq(a, Formula::make(b.op(), j))};
        }
        case Rule::ApproxBox: {
            if (b.op() != Op::Not || b.child(0).op() != Op::Nom || !is_box(a.op())) return std::nullopt;
            Formula nj = neg(Formula::nom(fresh[0]));
            return Ineqs{leq(a.child(0), nj), leq(Formula::make(a.op(), nj), b)};
        }
        case Rule::ApproxImp: {
            if (b.op() != Op::Not || b.child(0).op() != Op::Nom || a.op() != Op::Imp) return std::nullopt;
            Formula j = Formula::nom(fresh[0]);
            Formula nk = neg(Formula::nom(fresh[1]));
            return Ineqs{leq(j, a.child(0)), leq(a.child(1), nk), leq(imp(j, nk), b)};
        }
        default:
            return std::nullopt;
    }
}

AckermannCheck ackermann_precondition(const std::vector<Inequality>& s, const std::string& p, Side side) {
    AckermannCheck c;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Inequality& i = s[k];
        if (!contains_var(i, p)) continue;
        if (i.rel != Rel::Leq) {
            c.why = render(i) + ": subordination inequality in the system";
            return c;
        }
        const Formula& bound_side = side == Side::Right ? i.rhs : i.lhs;
        const Formula& other = side == Side::Right ? i.lhs : i.rhs;
        if (bound_side.op() == Op::Var && bound_side.name() == p && !contains_var(other, p)) {
            c.bounds.push_back(k);
            continue;
        }
        Occurrences l = occurrences(i.lhs, p), r = occurrences(i.rhs, p);
        // Right: positive in the left side, negative in the right side. Left: the reverse.
        bool ok = side == Side::Right ? (!l.neg && !r.pos) : (!l.pos && !r.neg);
        if (!ok) {
            c.why = render(i) + ": " + p + " has the wrong polarity for the " + to_string(side) + " rule";
            return c;
        }
        c.affected.push_back(k);
    }
    c.ok = true;
    return c;
}

std::vector<Inequality> ackermann(const std::vector<Inequality>& s, const std::string& p, Side side) {
    AckermannCheck c = ackermann_precondition(s, p, side);
    if (!c.ok) throw std::invalid_argument("ackermann: " + c.why);
    Formula value;
    if (c.bounds.empty()) {
        value = side == Side::Right ? Formula::bot() : Formula::top();
    } else {
        for (std::size_t n = 0; n < c.bounds.size(); ++n) {
            const Inequality& b = s[c.bounds[n]];
            const Formula& theta = side == Side::Right ? b.lhs : b.rhs;
            if (n == 0)
                value = theta;
            else
                value = side == Side::Right ? disj(value, theta) : conj(value, theta);
        }
    }
    std::vector<std::size_t> consumed = c.bounds;
    consumed.insert(consumed.end(), c.affected.begin(), c.affected.end());
    std::sort(consumed.begin(), consumed.end());
    std::vector<Inequality> produced;
    for (std::size_t k : c.affected) produced.push_back(substitute(s[k], value, p));
    return splice(s, consumed, produced);
}

std::vector<Inequality> splice(const std::vector<Inequality>& s, const std::vector<std::size_t>& consumed,
                               const std::vector<Inequality>& produced) {
    std::vector<Inequality> out;
    if (consumed.empty()) {
        out = s;
        out.insert(out.end(), produced.begin(), produced.end());
        return out;
    }
    std::size_t at = consumed.front();
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k == at) out.insert(out.end(), produced.begin(), produced.end());
        if (std::binary_search(consumed.begin(), consumed.end(), k)) continue;
        out.push_back(s[k]);
    }
    return out;
}

namespace {

Formula node(Op op, Sign s, const Formula& a, const Formula& b = Formula());

// Rebuilds a node whose children are already distributed, pushing a Skeleton
// +\/ or -/\ child above it when the node is a carrier for it.
Formula node(Op op, Sign s, const Formula& a, const Formula& b) {
    auto cs = [&](int i) { return child_sign(op, s, i); };
    auto is_join = [&](const Formula& f, int i) { return cs(i) == Sign::Plus && f.op() == Op::Or; };
    auto is_meet = [&](const Formula& f, int i) { return cs(i) == Sign::Minus && f.op() == Op::And; };
    if (s == Sign::Plus) {
        if (is_diamond(op) && is_join(a, 0))
            return node(Op::Or, s, node(op, s, a.child(0)), node(op, s, a.child(1)));
        if (op == Op::And && is_join(a, 0))
            return node(Op::Or, s, node(Op::And, s, a.child(0), b), node(Op::And, s, a.child(1), b));
        if (op == Op::And && is_join(b, 1))
            return node(Op::Or, s, node(Op::And, s, a, b.child(0)), node(Op::And, s, a, b.child(1)));
        if (op == Op::Not && is_meet(a, 0))
            return node(Op::Or, s, node(Op::Not, s, a.child(0)), node(Op::Not, s, a.child(1)));
    } else {
        if (op == Op::Not && is_join(a, 0))
            return node(Op::And, s, node(Op::Not, s, a.child(0)), node(Op::Not, s, a.child(1)));
        if (op == Op::Imp && is_join(a, 0))
            return node(Op::And, s, node(Op::Imp, s, a.child(0), b), node(Op::Imp, s, a.child(1), b));
        if (is_box(op) && is_meet(a, 0))
            return node(Op::And, s, node(op, s, a.child(0)), node(op, s, a.child(1)));
        if (op == Op::Or && is_meet(a, 0))
            return node(Op::And, s, node(Op::Or, s, a.child(0), b), node(Op::Or, s, a.child(1), b));
        if (op == Op::Or && is_meet(b, 1))
            return node(Op::And, s, node(Op::Or, s, a, b.child(0)), node(Op::Or, s, a, b.child(1)));
        if (op == Op::Imp && is_meet(b, 1))
            return node(Op::And, s, node(Op::Imp, s, a, b.child(0)), node(Op::Imp, s, a, b.child(1)));
    }
    return arity(op) == 1 ? Formula::make(op, a) : Formula::make(op, a, b);
}

// Only nodes whose whole path to the root is Skeleton take part.
Formula dist(const Formula& f, Sign s, bool in_skeleton) {
    Op op = f.op();
    if (is_leaf(op)) return f;
    bool here = in_skeleton && is_skeleton_node(s, op);
    if (!here) return f;
    if (arity(op) == 1) return node(op, s, dist(f.child(0), child_sign(op, s, 0), true));
    return node(op, s, dist(f.child(0), child_sign(op, s, 0), true), dist(f.child(1), child_sign(op, s, 1), true));
}

}  // namespace

Formula distribute(const Formula& f, Sign sign) { return dist(f, sign, true); }

}  // namespace alba
