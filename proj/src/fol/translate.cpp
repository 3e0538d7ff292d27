#include <algorithm>

#include "alba/fol.hpp"

namespace alba {

namespace {

using F = FOFormula;

struct Translator {
    int& counter;
    std::set<std::string> avoid;  // nominal names, never used as fresh variables

    std::string fresh() {
        while (true) {
            std::string x = "x" + std::to_string(counter++);
            if (!avoid.count(x)) return x;
        }
    }

    F st(const Formula& f, const std::string& x) {
        switch (f.op()) {
            case Op::Var: return F::pred(f.name(), x);
            case Op::Nom: return F::eq(x, f.name());
            case Op::Bot: return F::falsity();
            case Op::Top: return F::truth();
            case Op::Not: return F::negation(st(f.child(0), x));
            case Op::And: return F::conjunction(st(f.child(0), x), st(f.child(1), x));
            case Op::Or: return F::disjunction(st(f.child(0), x), st(f.child(1), x));
            case Op::Imp: return F::implication(st(f.child(0), x), st(f.child(1), x));
            default: break;
        }
        std::string y = fresh();
        F link;
        switch (f.op()) {
            case Op::Dia:
            case Op::Box: link = F::relp(x, y); break;
            case Op::SDia:
            case Op::SBox: link = F::rel(y, x); break;
            case Op::BDia:
            case Op::BBox: link = F::relp(y, x); break;
            default: link = F::rel(x, y); break;  // SBDia, SBBox
        }
        F body = st(f.child(0), y);
        if (is_diamond(f.op())) return F::exists(y, F::conjunction(link, body));
        return F::forall(y, F::implication(link, body));
    }

    F ineq(const Inequality& i) {
        std::string x = fresh();
        Formula lhs = i.rel == Rel::Prec ? sdia(i.lhs) : i.lhs;
        return F::forall(x, F::implication(st(lhs, x), st(i.rhs, x)));
    }

    F all(const std::vector<Inequality>& is) {
        if (is.empty()) return F::truth();
        F out = ineq(is.front());
        for (std::size_t k = 1; k < is.size(); ++k) out = F::conjunction(out, ineq(is[k]));
        return out;
    }
};

void first_nominals(const Formula& f, std::vector<std::string>& order) {
    if (f.op() == Op::Nom) {
        if (std::find(order.begin(), order.end(), f.name()) == order.end()) order.push_back(f.name());
        return;
    }
    for (int c = 0; c < arity(f.op()); ++c) first_nominals(f.child(c), order);
}

F close(F body, const std::vector<Inequality>& is) {
    std::vector<std::string> order;
    for (const auto& i : is) {
        first_nominals(i.lhs, order);
        first_nominals(i.rhs, order);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) body = F::forall(*it, body);
    return body;
}

std::set<std::string> nominal_names(const std::vector<Inequality>& is) { return analyze_vocabulary(is).nominals; }

}  // namespace

FOFormula standard_translation(const Formula& f, const std::string& x, int& counter) {
    Translator t{counter, nominals(f)};
    t.avoid.insert(x);
    return t.st(f, x);
}

FOFormula standard_translation(const Formula& f, const std::string& x) {
    int counter = 0;
    return standard_translation(f, x, counter);
}

FOFormula standard_translation(const Inequality& i, bool close_nominals) {
    return standard_translation(MetaConjunction{{i}}, close_nominals);
}

FOFormula standard_translation(const MetaConjunction& m, bool close_nominals) {
    int counter = 0;
    Translator t{counter, nominal_names(m.items)};
    F body = t.all(m.items);
    return close_nominals ? close(body, m.items) : body;
}

FOFormula standard_translation(const QuasiInequality& q, bool close_nominals) {
    int counter = 0;
    std::vector<Inequality> every = q.antecedent;
    every.insert(every.end(), q.consequent.begin(), q.consequent.end());
    Translator t{counter, nominal_names(every)};
    F a = t.all(q.antecedent);
    F c = t.all(q.consequent);
    F body = F::implication(a, c);
    return close_nominals ? close(body, every) : body;
}

FOFormula standard_translation(const std::vector<QuasiInequality>& pure) {
    if (pure.empty()) return F::truth();
    F out = standard_translation(pure.front(), true);
    for (std::size_t k = 1; k < pure.size(); ++k) out = F::conjunction(out, standard_translation(pure[k], true));
    return out;
}

FOFormula correspondent(const std::vector<QuasiInequality>& pure) { return simplify_fo(standard_translation(pure)); }

}  // namespace alba
