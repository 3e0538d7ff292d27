#include <algorithm>
#include <stdexcept>

#include "alba/fol.hpp"

namespace alba {

struct FOFormula::Node {
    FOKind kind;
    std::string name;
    std::string a, b;
    std::vector<FOFormula> children;
};

FOFormula::FOFormula() {
    static const auto t = std::make_shared<const Node>(Node{FOKind::True, {}, {}, {}, {}});
    node_ = t;
}
FOFormula FOFormula::truth() { return FOFormula(); }
FOFormula FOFormula::falsity() { return FOFormula(std::make_shared<const Node>(Node{FOKind::False, {}, {}, {}, {}})); }

FOFormula FOFormula::rel(std::string a, std::string b) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::Rel, {}, std::move(a), std::move(b), {}}));
}
FOFormula FOFormula::relp(std::string a, std::string b) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::RelP, {}, std::move(a), std::move(b), {}}));
}
FOFormula FOFormula::pred(std::string p, std::string a) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::Pred, std::move(p), std::move(a), {}, {}}));
}
FOFormula FOFormula::eq(std::string a, std::string b) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::Eq, {}, std::move(a), std::move(b), {}}));
}
FOFormula FOFormula::negation(const FOFormula& a) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::Not, {}, {}, {}, {a}}));
}
FOFormula FOFormula::conjunction(const FOFormula& a, const FOFormula& b) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::And, {}, {}, {}, {a, b}}));
}
FOFormula FOFormula::disjunction(const FOFormula& a, const FOFormula& b) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::Or, {}, {}, {}, {a, b}}));
}
FOFormula FOFormula::implication(const FOFormula& a, const FOFormula& b) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::Imp, {}, {}, {}, {a, b}}));
}
FOFormula FOFormula::forall(std::string x, const FOFormula& body) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::Forall, std::move(x), {}, {}, {body}}));
}
FOFormula FOFormula::exists(std::string x, const FOFormula& body) {
    return FOFormula(std::make_shared<const Node>(Node{FOKind::Exists, std::move(x), {}, {}, {body}}));
}

FOKind FOFormula::kind() const { return node_->kind; }
const std::string& FOFormula::name() const { return node_->name; }
const std::string& FOFormula::a() const { return node_->a; }
const std::string& FOFormula::b() const { return node_->b; }
const FOFormula& FOFormula::child(int i) const { return node_->children.at(static_cast<std::size_t>(i)); }
int FOFormula::arity() const { return static_cast<int>(node_->children.size()); }

bool operator==(const FOFormula& x, const FOFormula& y) {
    if (x.node_ == y.node_) return true;
    if (x.kind() != y.kind() || x.name() != y.name() || x.a() != y.a() || x.b() != y.b() || x.arity() != y.arity())
        return false;
    for (int i = 0; i < x.arity(); ++i)
        if (x.child(i) != y.child(i)) return false;
    return true;
}

namespace {

void free_walk(const FOFormula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind()) {
        case FOKind::Rel:
        case FOKind::RelP:
        case FOKind::Eq:
            if (!bound.count(f.b())) out.insert(f.b());
            [[fallthrough]];
        case FOKind::Pred:
            if (!bound.count(f.a())) out.insert(f.a());
            return;
        case FOKind::Forall:
        case FOKind::Exists: {
            auto it = bound.insert(f.name());
            free_walk(f.child(0), bound, out);
            bound.erase(it);
            return;
        }
        default:
            for (int i = 0; i < f.arity(); ++i) free_walk(f.child(i), bound, out);
    }
}

void pred_walk(const FOFormula& f, std::set<std::string>& out) {
    if (f.kind() == FOKind::Pred) out.insert(f.name());
    for (int i = 0; i < f.arity(); ++i) pred_walk(f.child(i), out);
}

}  // namespace

std::set<std::string> free_vars(const FOFormula& f) {
    std::multiset<std::string> bound;
    std::set<std::string> out;
    free_walk(f, bound, out);
    return out;
}

std::set<std::string> predicates(const FOFormula& f) {
    std::set<std::string> out;
    pred_walk(f, out);
    return out;
}

int quantifier_depth(const FOFormula& f) {
    int d = 0;
    for (int i = 0; i < f.arity(); ++i) d = std::max(d, quantifier_depth(f.child(i)));
    if (f.kind() == FOKind::Forall || f.kind() == FOKind::Exists) ++d;
    return d;
}

}  // namespace alba
