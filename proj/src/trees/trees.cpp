#include "alba/trees.hpp"

#include <stdexcept>

#include "alba/syntax.hpp"

namespace alba {

Polarity OrderType::at(const std::string& p) const {
    auto it = assignment.find(p);
    if (it == assignment.end()) throw std::out_of_range("order-type has no entry for '" + p + "'");
    return it->second;
}

bool OrderType::covers(const std::set<std::string>& vars) const {
    for (const auto& v : vars)
        if (!assignment.count(v)) return false;
    return true;
}

bool OrderType::critical(Sign leaf_sign, const std::string& p) const {
    auto it = assignment.find(p);
    if (it == assignment.end()) return false;
    Polarity e = it->second;
    return (leaf_sign == Sign::Plus) == (e == Polarity::One);
}

OrderType OrderType::dual() const {
    OrderType d;
    for (const auto& [k, v] : assignment) d.assignment[k] = v == Polarity::One ? Polarity::Partial : Polarity::One;
    return d;
}

DependenceOrder DependenceOrder::linear(const std::vector<std::string>& bottom_to_top) {
    DependenceOrder o;
    for (std::size_t i = 0; i < bottom_to_top.size(); ++i)
        for (std::size_t j = i + 1; j < bottom_to_top.size(); ++j) o.edges.insert({bottom_to_top[i], bottom_to_top[j]});
    return o;
}

bool DependenceOrder::less(const std::string& a, const std::string& b) const { return edges.count({a, b}) > 0; }

bool DependenceOrder::is_strict_order() const {
    for (const auto& [a, b] : edges) {
        if (a == b) return false;
        for (const auto& [c, d] : edges)
            if (b == c && !edges.count({a, d})) return false;
    }
    return true;
}

const char* to_string(NodeClass c) {
    switch (c) {
        case NodeClass::DeltaAdjoint: return "Delta-adjoint";
        case NodeClass::SLR: return "SLR";
        case NodeClass::SRA: return "SRA";
        case NodeClass::SRR: return "SRR";
        default: return "leaf";
    }
}

const char* to_string(Polarity p) { return p == Polarity::One ? "1" : "d"; }

bool is_delta_adjoint(Sign s, Op op) {
    return (s == Sign::Plus && op == Op::Or) || (s == Sign::Minus && op == Op::And);
}

bool is_slr(Sign s, Op op) {
    if (op == Op::Not) return true;
    if (s == Sign::Plus) return op == Op::And || is_diamond(op);
    return op == Op::Or || is_box(op) || op == Op::Imp;
}

bool is_sra(Sign s, Op op) {
    if (op == Op::Not) return true;
    if (s == Sign::Plus) return op == Op::And || is_box(op);
    return op == Op::Or || is_diamond(op);
}

bool is_srr(Sign s, Op op) {
    if (s == Sign::Plus) return op == Op::Or || op == Op::Imp;
    return op == Op::And;
}

NodeClass classify_node(Sign s, Op op) {
    if (is_leaf(op)) return NodeClass::Leaf;
    if (is_delta_adjoint(s, op)) return NodeClass::DeltaAdjoint;
    if (is_slr(s, op)) return NodeClass::SLR;
    if (is_sra(s, op)) return NodeClass::SRA;
    if (is_srr(s, op)) return NodeClass::SRR;
    throw std::logic_error("classify_node: unclassified node");
}

SignedTree build_signed_tree(Sign sign, const Formula& f) {
    SignedTree t;
    t.sign = sign;
    t.formula = f;
    t.node_class = classify_node(sign, f.op());
    for (int i = 0; i < arity(f.op()); ++i) t.children.push_back(build_signed_tree(child_sign(f.op(), sign, i), f.child(i)));
    return t;
}

namespace {

void dump_into(const SignedTree& t, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += sign_char(t.sign);
    if (is_leaf(t.formula.op())) {
        out += render(t.formula);
    } else {
        out += op_keyword(t.formula.op());
        out += "  [";
        out += to_string(t.node_class);
        out += ']';
    }
    out += '\n';
    for (const auto& c : t.children) dump_into(c, depth + 1, out);
}

void walk(const Formula& f, Sign s, std::vector<BranchStep>& path, std::vector<Branch>& out) {
    if (f.op() == Op::Var) {
        Branch b;
        b.leaf = f.name();
        b.leaf_sign = s;
        b.steps.assign(path.rbegin(), path.rend());
        out.push_back(std::move(b));
        return;
    }
    int n = arity(f.op());
    for (int i = 0; i < n; ++i) {
        BranchStep st{f.op(), s, i, Formula(), Sign::Plus};
        if (n == 2) {
            st.sibling = f.child(1 - i);
            st.sibling_sign = child_sign(f.op(), s, 1 - i);
        }
        path.push_back(st);
        walk(f.child(i), child_sign(f.op(), s, i), path, out);
        path.pop_back();
    }
}

bool uniform(const Formula& f, Sign s, const OrderType& eps, bool dual) {
    if (f.op() == Op::Var) return !eps.has(f.name()) || eps.critical(s, f.name()) != dual;
    for (int i = 0; i < arity(f.op()); ++i)
        if (!uniform(f.child(i), child_sign(f.op(), s, i), eps, dual)) return false;
    return true;
}

}  // namespace

std::string dump(const SignedTree& t) {
    std::string out;
    dump_into(t, 0, out);
    return out;
}

std::vector<Branch> branches(Sign sign, const Formula& f) {
    std::vector<Branch> out;
    std::vector<BranchStep> path;
    walk(f, sign, path, out);
    return out;
}

std::vector<Branch> branches(const SignedTree& t) { return branches(t.sign, t.formula); }

std::vector<Branch> critical_branches(Sign sign, const Formula& f, const OrderType& eps) {
    std::vector<Branch> out;
    for (auto& b : branches(sign, f))
        if (eps.critical(b.leaf_sign, b.leaf)) out.push_back(std::move(b));
    return out;
}

std::vector<Branch> critical_branches(const SignedTree& t, const OrderType& eps) {
    return critical_branches(t.sign, t.formula, eps);
}

BranchKind branch_kind(const Branch& b) {
    BranchKind k;
    const int n = static_cast<int>(b.steps.size());
    int split = 0;  // P1 = steps[0, split)
    for (int i = n - 1; i >= 0; --i) {
        if (!is_skeleton_node(b.steps[i].sign, b.steps[i].op)) {
            split = i + 1;
            break;
        }
    }
    k.good = true;
    for (int i = 0; i < split; ++i)
        if (!is_pia_node(b.steps[i].sign, b.steps[i].op)) k.good = false;
    if (!k.good) return k;
    k.pia_len = split;
    k.skel_len = n - split;
    k.is_skeleton = split == 0;
    k.is_pia = true;
    for (const auto& st : b.steps)
        if (!is_pia_node(st.sign, st.op)) k.is_pia = false;
    return k;
}

bool is_eps_uniform(Sign sign, const Formula& f, const OrderType& eps, bool dual) {
    return uniform(f, sign, eps, dual);
}

bool is_eps_uniform(const SignedTree& t, const OrderType& eps, bool dual) {
    return uniform(t.formula, t.sign, eps, dual);
}

}  // namespace alba
