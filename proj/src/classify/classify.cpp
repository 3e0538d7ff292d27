#include "alba/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "alba/syntax.hpp"

namespace alba {

const char* to_string(Tag t) {
    switch (t) {
        case Tag::Receiving: return "receiving";
        case Tag::Solvable: return "solvable";
        case Tag::Neither: return "neither";
        case Tag::ConsequentInductive: return "consequent-inductive";
        default: return "consequent-not-inductive";
    }
}

namespace {

std::string describe(const Branch& b) {
    std::string s = "branch ";
    s += sign_char(b.leaf_sign);
    s += b.leaf;
    for (const auto& st : b.steps) {
        s += " < ";
        s += sign_char(st.sign);
        s += op_keyword(st.op);
    }
    return s;
}

std::string side_name(Sign s, const Formula& f) { return std::string(1, sign_char(s)) + "(" + render(f) + ")"; }

}  // namespace

std::optional<std::string> inductive_tree_violation(Sign sign, const Formula& f, const OrderType& eps,
                                                    const DependenceOrder& omega, bool require_pia) {
    for (const Branch& b : critical_branches(sign, f, eps)) {
        BranchKind k = branch_kind(b);
        if (!k.good) return side_name(sign, f) + ": critical " + describe(b) + " is not good";
        if (require_pia && !k.is_pia) return side_name(sign, f) + ": critical " + describe(b) + " is not PIA";
        std::size_t limit = require_pia ? b.steps.size() : static_cast<std::size_t>(k.pia_len);
        for (std::size_t i = 0; i < limit; ++i) {
            const BranchStep& st = b.steps[i];
            if (!is_srr(st.sign, st.op)) continue;
            if (!is_eps_uniform(st.sibling_sign, st.sibling, eps, true))
                return side_name(sign, f) + ": side formula " + render(st.sibling) + " of SRR node on " + describe(b) +
                       " is not eps-dual uniform";
            for (const auto& q : prop_vars(st.sibling))
                if (!omega.less(q, b.leaf))
                    return side_name(sign, f) + ": " + q + " in side formula " + render(st.sibling) + " is not below " +
                           b.leaf;
        }
    }
    return std::nullopt;
}

bool check_inductive_tree(const SignedTree& t, const OrderType& eps, const DependenceOrder& omega) {
    return !inductive_tree_violation(t.sign, t.formula, eps, omega);
}

bool check_inductive_tree(const SignedTree& t, const Certificate& cert) {
    return check_inductive_tree(t, cert.eps, cert.omega());
}

Tag tag_inequality(const Inequality& i, const OrderType& eps, const DependenceOrder& omega, std::string* why) {
    bool lu = is_eps_uniform(Sign::Minus, i.lhs, eps, true);
    bool ru = is_eps_uniform(Sign::Plus, i.rhs, eps, true);
    if (lu && ru) return Tag::Receiving;
    if (!lu && !ru) {
        if (why) *why = render(i) + ": critical occurrences on both sides";
        return Tag::Neither;
    }
    Sign s = lu ? Sign::Plus : Sign::Minus;
    const Formula& other = lu ? i.rhs : i.lhs;
    const Formula& uniform_side = lu ? i.lhs : i.rhs;
    if (auto v = inductive_tree_violation(s, other, eps, omega, true)) {
        if (why) *why = render(i) + ": " + *v;
        return Tag::Neither;
    }
    auto side_vars = prop_vars(uniform_side);
    for (const Branch& b : critical_branches(s, other, eps))
        for (const auto& q : side_vars)
            if (!omega.less(q, b.leaf)) {
                if (why) *why = render(i) + ": " + q + " is not below critical variable " + b.leaf;
                return Tag::Neither;
            }
    return Tag::Solvable;
}

Tag tag_inequality(const Inequality& i, const Certificate& cert) { return tag_inequality(i, cert.eps, cert.omega()); }

ClassificationReport check_inductive_quasi(const QuasiInequality& q, const OrderType& eps,
                                           const DependenceOrder& omega) {
    ClassificationReport r;
    r.accepted = true;
    for (const auto& i : q.antecedent) {
        std::string why;
        Tag t = tag_inequality(i, eps, omega, &why);
        r.tags.push_back({i, t});
        if (t == Tag::Neither && r.accepted) {
            r.accepted = false;
            r.diagnostic = "antecedent " + why;
        }
    }
    for (const auto& c : q.consequent) {
        auto v = inductive_tree_violation(Sign::Plus, c.lhs, eps, omega);
        if (!v) v = inductive_tree_violation(Sign::Minus, c.rhs, eps, omega);
        r.tags.push_back({c, v ? Tag::ConsequentNotInductive : Tag::ConsequentInductive});
        if (v && r.accepted) {
            r.accepted = false;
            r.diagnostic = "consequent " + *v;
        }
    }
    return r;
}

ClassificationReport check_inductive_quasi(const QuasiInequality& q, const Certificate& cert) {
    ClassificationReport r = check_inductive_quasi(q, cert.eps, cert.omega());
    if (r.accepted) r.certificate = cert;
    return r;
}

std::map<std::string, Polarity> uniform_variables(const QuasiInequality& q) {
    std::map<std::string, Polarity> out;
    VocabularyReport v = analyze_vocabulary(Statement(q));
    for (const auto& p : v.prop_vars) {
        // down_ok: p may be replaced by F, up_ok: by T
        bool down_ok = true, up_ok = true;
        auto scan = [&](const std::vector<Inequality>& is, bool antecedent) {
            for (const auto& i : is) {
                Occurrences l = occurrences(i.lhs, p), r = occurrences(i.rhs, p);
                // antecedent: positive on the left, negative on the right; consequent: the reverse
                bool lpos = antecedent, rpos = !antecedent;
                auto ok = [](const Occurrences& o, bool want_pos) { return want_pos ? !o.neg : !o.pos; };
                if (!ok(l, lpos) || !ok(r, rpos)) down_ok = false;
                if (!ok(l, !lpos) || !ok(r, !rpos)) up_ok = false;
            }
        };
        scan(q.antecedent, true);
        scan(q.consequent, false);
        if (down_ok)
            out[p] = Polarity::One;
        else if (up_ok)
            out[p] = Polarity::Partial;
    }
    return out;
}

std::optional<Certificate> find_certificate(const QuasiInequality& q, int max_vars) {
    VocabularyReport v = analyze_vocabulary(Statement(q));
    if (static_cast<int>(v.prop_vars.size()) > max_vars)
        throw std::invalid_argument("certificate search: " + std::to_string(v.prop_vars.size()) +
                                    " variables exceed the bound of " + std::to_string(max_vars));
    auto fixed = uniform_variables(q);
    std::vector<std::string> free_vars, base_order;
    for (const auto& p : v.prop_vars) {
        if (fixed.count(p))
            base_order.push_back(p);
        else
            free_vars.push_back(p);
    }
    const std::size_t n = free_vars.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Certificate c;
        for (const auto& [p, e] : fixed) c.eps.assignment[p] = e;
        for (std::size_t k = 0; k < n; ++k)
            c.eps.assignment[free_vars[k]] = (mask >> (n - 1 - k)) & 1 ? Polarity::Partial : Polarity::One;
        std::vector<std::string> perm = free_vars;
        do {
            c.order = base_order;
            c.order.insert(c.order.end(), perm.begin(), perm.end());
            if (check_inductive_quasi(q, c).accepted) return c;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

namespace {

void polarity_walk(const Formula& f, Sign s, SyntacticPolarity& p) {
    Op op = f.op();
    bool up = op == Op::Nom || op == Op::BDia || op == Op::SDia || op == Op::SBDia;
    bool down = op == Op::BBox || op == Op::SBox || op == Op::SBBox;
    if (up) {
        if (s == Sign::Minus) p.closed = false;
        if (s == Sign::Plus) p.open = false;
    }
    if (down) {
        if (s == Sign::Plus) p.closed = false;
        if (s == Sign::Minus) p.open = false;
    }
    for (int i = 0; i < arity(op); ++i) polarity_walk(f.child(i), child_sign(op, s, i), p);
}

}  // namespace

SyntacticPolarity syntactic_polarity(const Formula& f, Sign sign) {
    SyntacticPolarity p{true, true};
    polarity_walk(f, sign, p);
    return p;
}

ClassificationReport check_restricted_inductive_quasi(const QuasiInequality& q) {
    ClassificationReport r;
    VocabularyReport v = analyze_vocabulary(Statement(q));
    if (!v.nominals.empty() || v.has_dotted || v.has_black) {
        r.diagnostic = "input contains nominals, sdia/sbox or black connectives";
        return r;
    }
    auto c = find_certificate(q);
    if (!c) {
        r.diagnostic = "no certificate";
        return r;
    }
    return check_inductive_quasi(q, *c);
}

namespace {

// all branches of *f ending in bound variables are eps-dual critical
bool bound_uniform(Sign s, const Formula& f, const OrderType& eps_q) { return is_eps_uniform(s, f, eps_q, true); }

bool all_skeleton(Sign s, const Formula& f) {
    for (const auto& b : branches(s, f))
        if (!branch_kind(b).is_skeleton) return false;
    return true;
}

std::optional<std::string> restricted_solvable_violation(const Inequality& i, const OrderType& eps_q,
                                                         const DependenceOrder& omega) {
    bool lu = bound_uniform(Sign::Minus, i.lhs, eps_q);
    bool ru = bound_uniform(Sign::Plus, i.rhs, eps_q);
    if (lu == ru) return std::string("not exactly one side is uniform in the bound variables");
    Sign ks = lu ? Sign::Plus : Sign::Minus;
    const Formula& kappa = lu ? i.rhs : i.lhs;
    const Formula& rho = lu ? i.lhs : i.rhs;
    if (critical_branches(ks, kappa, eps_q).empty()) return std::string("no critical branch");
    if (auto v = inductive_tree_violation(ks, kappa, eps_q, omega, true)) return v;
    for (const Branch& b : critical_branches(ks, kappa, eps_q))
        for (const auto& r : prop_vars(rho))
            if (!omega.less(r, b.leaf)) return r + " is not below " + b.leaf;
    // non-critical branches of -iota, +zeta must be Skeleton in +iota, -zeta
    auto check = [&](Sign s, const Formula& f) -> bool {
        auto here = branches(s, f);
        auto there = branches(flip(s), f);
        for (std::size_t k = 0; k < here.size(); ++k)
            if (!eps_q.critical(here[k].leaf_sign, here[k].leaf) && !branch_kind(there[k]).is_skeleton) return false;
        return true;
    };
    if (!check(Sign::Minus, i.lhs) || !check(Sign::Plus, i.rhs))
        return std::string("a non-critical branch is not Skeleton in the opposite tree");
    return std::nullopt;
}

}  // namespace

ClassificationReport check_restricted_first_round_good(const ExistsStatement& e, const OrderType& eps_q,
                                                       const DependenceOrder& omega) {
    ClassificationReport r;
    r.accepted = true;
    for (const auto& i : e.inequalities) {
        bool receiving = bound_uniform(Sign::Minus, i.lhs, eps_q) && bound_uniform(Sign::Plus, i.rhs, eps_q) &&
                         all_skeleton(Sign::Plus, i.lhs) && all_skeleton(Sign::Minus, i.rhs);
        if (receiving) {
            r.tags.push_back({i, Tag::Receiving});
            continue;
        }
        auto v = restricted_solvable_violation(i, eps_q, omega);
        r.tags.push_back({i, v ? Tag::Neither : Tag::Solvable});
        if (v && r.accepted) {
            r.accepted = false;
            r.diagnostic = render(i) + ": " + *v;
        }
    }
    return r;
}

}  // namespace alba
