#include "alba/formula.hpp"

#include <functional>
#include <stdexcept>

namespace alba {

struct Formula::Node {
    Op op;
    std::string name;
    Formula a, b;
    std::size_t hash;
    int size;
    int depth;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

int arity(Op op) {
    switch (op) {
        case Op::Var:
        case Op::Nom:
        case Op::Bot:
        case Op::Top:
            return 0;
        case Op::And:
        case Op::Or:
        case Op::Imp:
            return 2;
        default:
            return 1;
    }
}

bool is_leaf(Op op) { return arity(op) == 0; }

bool is_modal(Op op) { return arity(op) == 1 && op != Op::Not; }

bool is_diamond(Op op) {
    return op == Op::Dia || op == Op::SDia || op == Op::BDia || op == Op::SBDia;
}

bool is_box(Op op) {
    return op == Op::Box || op == Op::SBox || op == Op::BBox || op == Op::SBBox;
}

bool is_black(Op op) {
    return op == Op::BBox || op == Op::BDia || op == Op::SBBox || op == Op::SBDia;
}

const char* op_keyword(Op op) {
    switch (op) {
        case Op::Not: return "~";
        case Op::And: return "/\\";
        case Op::Or: return "\\/";
        case Op::Imp: return "->";
        case Op::Box: return "box";
        case Op::Dia: return "dia";
        case Op::SBox: return "sbox";
        case Op::SDia: return "sdia";
        case Op::BBox: return "bbox";
        case Op::BDia: return "bdia";
        case Op::SBBox: return "sbbox";
        case Op::SBDia: return "sbdia";
        default: return "";
    }
}

Formula::Formula() : node_(nullptr) {
    static const Formula bot_value = Formula::bot();
    node_ = bot_value.node_;
}

Formula Formula::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->hash = mix(std::hash<std::string>{}(name), 1);
    n->name = std::move(name);
    n->size = 1;
    n->depth = 0;
    return Formula(std::move(n));
}

Formula Formula::nom(std::string name) {
    auto n = std::make_shared<Node>();
    n->op = Op::Nom;
    n->hash = mix(std::hash<std::string>{}(name), 2);
    n->name = std::move(name);
    n->size = 1;
    n->depth = 0;
    return Formula(std::move(n));
}

Formula Formula::bot() {
    // children of a leaf are never read, so they may stay null here
    static const std::shared_ptr<const Node> shared = [] {
        auto n = std::make_shared<Node>(Node{Op::Bot, "", Formula(nullptr), Formula(nullptr), 3, 1, 0});
        return std::shared_ptr<const Node>(n);
    }();
    return Formula(shared);
}

Formula Formula::top() {
    static const std::shared_ptr<const Node> shared = [] {
        auto n = std::make_shared<Node>(Node{Op::Top, "", Formula(nullptr), Formula(nullptr), 4, 1, 0});
        return std::shared_ptr<const Node>(n);
    }();
    return Formula(shared);
}

Formula Formula::make(Op op, const Formula& a) {
    if (arity(op) != 1) throw std::logic_error("Formula::make: expected unary connective");
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = a;
    n->b = Formula(nullptr);
    n->hash = mix(mix(static_cast<std::size_t>(op) * 7919u, a.hash()), 5);
    n->size = 1 + a.size();
    n->depth = a.modal_depth() + (is_modal(op) ? 1 : 0);
    return Formula(std::move(n));
}

Formula Formula::make(Op op, const Formula& a, const Formula& b) {
    if (arity(op) != 2) throw std::logic_error("Formula::make: expected binary connective");
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = a;
    n->b = b;
    n->hash = mix(mix(mix(static_cast<std::size_t>(op) * 7919u, a.hash()), b.hash()), 6);
    n->size = 1 + a.size() + b.size();
    n->depth = std::max(a.modal_depth(), b.modal_depth());
    return Formula(std::move(n));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::child(int i) const { return i == 0 ? node_->a : node_->b; }
std::size_t Formula::hash() const { return node_->hash; }
int Formula::size() const { return node_->size; }
int Formula::modal_depth() const { return node_->depth; }

int Formula::compare(const Formula& o) const {
    if (node_ == o.node_) return 0;
    if (op() != o.op()) return op() < o.op() ? -1 : 1;
    switch (arity(op())) {
        case 0:
            return name().compare(o.name()) < 0 ? -1 : (name() == o.name() ? 0 : 1);
        case 1:
            return child(0).compare(o.child(0));
        default: {
            int c = child(0).compare(o.child(0));
            return c != 0 ? c : child(1).compare(o.child(1));
        }
    }
}

Formula neg(const Formula& a) { return Formula::make(Op::Not, a); }
Formula conj(const Formula& a, const Formula& b) { return Formula::make(Op::And, a, b); }
Formula disj(const Formula& a, const Formula& b) { return Formula::make(Op::Or, a, b); }
Formula imp(const Formula& a, const Formula& b) { return Formula::make(Op::Imp, a, b); }
Formula box(const Formula& a) { return Formula::make(Op::Box, a); }
Formula dia(const Formula& a) { return Formula::make(Op::Dia, a); }
Formula sbox(const Formula& a) { return Formula::make(Op::SBox, a); }
Formula sdia(const Formula& a) { return Formula::make(Op::SDia, a); }
Formula bbox(const Formula& a) { return Formula::make(Op::BBox, a); }
Formula bdia(const Formula& a) { return Formula::make(Op::BDia, a); }
Formula sbbox(const Formula& a) { return Formula::make(Op::SBBox, a); }
Formula sbdia(const Formula& a) { return Formula::make(Op::SBDia, a); }

Formula neg_smart(const Formula& a) { return a.op() == Op::Not ? a.child(0) : neg(a); }

Sign child_sign(Op op, Sign parent, int child) {
    if (op == Op::Not) return flip(parent);
    if (op == Op::Imp && child == 0) return flip(parent);
    return parent;
}

namespace {

void collect(const Formula& f, Op kind, std::set<std::string>& out) {
    if (f.op() == kind) {
        out.insert(f.name());
        return;
    }
    for (int i = 0; i < arity(f.op()); ++i) collect(f.child(i), kind, out);
}

bool contains_leaf(const Formula& f, Op kind, const std::string& name) {
    if (f.op() == kind) return f.name() == name;
    for (int i = 0; i < arity(f.op()); ++i)
        if (contains_leaf(f.child(i), kind, name)) return true;
    return false;
}

void occ(const Formula& f, const std::string& p, Sign s, Occurrences& o) {
    if (f.op() == Op::Var) {
        if (f.name() == p) (s == Sign::Plus ? o.pos : o.neg) = true;
        return;
    }
    for (int i = 0; i < arity(f.op()); ++i) occ(f.child(i), p, child_sign(f.op(), s, i), o);
}

Formula replace_leaf(const Formula& theta, Op kind, const Formula& eta, const std::string& name) {
    if (theta.op() == kind) return theta.name() == name ? eta : theta;
    switch (arity(theta.op())) {
        case 0:
            return theta;
        case 1: {
            Formula a = replace_leaf(theta.child(0), kind, eta, name);
            return a.same_node(theta.child(0)) ? theta : Formula::make(theta.op(), a);
        }
        default: {
            Formula a = replace_leaf(theta.child(0), kind, eta, name);
            Formula b = replace_leaf(theta.child(1), kind, eta, name);
            if (a.same_node(theta.child(0)) && b.same_node(theta.child(1))) return theta;
            return Formula::make(theta.op(), a, b);
        }
    }
}

void vocab(const Formula& f, VocabularyReport& r) {
    switch (f.op()) {
        case Op::Var:
            r.prop_vars.insert(f.name());
            r.is_pure = false;
            return;
        case Op::Nom:
            r.nominals.insert(f.name());
            return;
        case Op::SDia:
        case Op::SBox:
            r.has_dotted = true;
            break;
        default:
            if (is_black(f.op())) r.has_black = true;
            break;
    }
    for (int i = 0; i < arity(f.op()); ++i) vocab(f.child(i), r);
}

}  // namespace

std::set<std::string> prop_vars(const Formula& f) {
    std::set<std::string> out;
    collect(f, Op::Var, out);
    return out;
}

std::set<std::string> nominals(const Formula& f) {
    std::set<std::string> out;
    collect(f, Op::Nom, out);
    return out;
}

bool contains_var(const Formula& f, const std::string& p) { return contains_leaf(f, Op::Var, p); }
bool contains_nominal(const Formula& f, const std::string& n) { return contains_leaf(f, Op::Nom, n); }

bool is_pure(const Formula& f) {
    if (f.op() == Op::Var) return false;
    for (int i = 0; i < arity(f.op()); ++i)
        if (!is_pure(f.child(i))) return false;
    return true;
}

Occurrences occurrences(const Formula& f, const std::string& p, Sign root) {
    Occurrences o;
    occ(f, p, root, o);
    return o;
}

Formula substitute(const Formula& theta, const Formula& eta, const std::string& p) {
    return replace_leaf(theta, Op::Var, eta, p);
}

Formula substitute_nominal(const Formula& theta, const Formula& eta, const std::string& n) {
    return replace_leaf(theta, Op::Nom, eta, n);
}

VocabularyReport analyze_vocabulary(const Formula& f) {
    VocabularyReport r;
    vocab(f, r);
    return r;
}

void merge_into(VocabularyReport& into, const VocabularyReport& from) {
    into.prop_vars.insert(from.prop_vars.begin(), from.prop_vars.end());
    into.nominals.insert(from.nominals.begin(), from.nominals.end());
    into.has_black = into.has_black || from.has_black;
    into.has_dotted = into.has_dotted || from.has_dotted;
    into.is_pure = into.is_pure && from.is_pure;
}

}  // namespace alba
