#include "alba/statement.hpp"

namespace alba {

bool is_trivial(const Inequality& i) {
    return i.rel == Rel::Leq && i.lhs.op() == Op::Top && i.rhs.op() == Op::Top;
}

QuasiInequality normalize(QuasiInequality q) {
    if (q.antecedent.empty()) q.antecedent.push_back(leq(Formula::top(), Formula::top()));
    if (q.consequent.empty()) q.consequent.push_back(leq(Formula::top(), Formula::top()));
    return q;
}

bool is_pure(const Inequality& i) { return is_pure(i.lhs) && is_pure(i.rhs); }

bool contains_var(const Inequality& i, const std::string& p) {
    return contains_var(i.lhs, p) || contains_var(i.rhs, p);
}

bool contains_nominal(const Inequality& i, const std::string& n) {
    return contains_nominal(i.lhs, n) || contains_nominal(i.rhs, n);
}

Inequality substitute(const Inequality& i, const Formula& eta, const std::string& p) {
    return {substitute(i.lhs, eta, p), i.rel, substitute(i.rhs, eta, p)};
}

Inequality substitute_nominal(const Inequality& i, const Formula& eta, const std::string& n) {
    return {substitute_nominal(i.lhs, eta, n), i.rel, substitute_nominal(i.rhs, eta, n)};
}

VocabularyReport analyze_vocabulary(const Inequality& i) {
    VocabularyReport r = analyze_vocabulary(i.lhs);
    merge_into(r, analyze_vocabulary(i.rhs));
    return r;
}

VocabularyReport analyze_vocabulary(const std::vector<Inequality>& is) {
    VocabularyReport r;
    for (const auto& i : is) merge_into(r, analyze_vocabulary(i));
    return r;
}

VocabularyReport analyze_vocabulary(const Statement& s) {
    struct V {
        VocabularyReport operator()(const Inequality& i) const { return analyze_vocabulary(i); }
        VocabularyReport operator()(const MetaConjunction& m) const { return analyze_vocabulary(m.items); }
        VocabularyReport operator()(const QuasiInequality& q) const {
            VocabularyReport r = analyze_vocabulary(q.antecedent);
            merge_into(r, analyze_vocabulary(q.consequent));
            return r;
        }
        VocabularyReport operator()(const Pi2Statement& p) const {
            VocabularyReport r = analyze_vocabulary(p.antecedent);
            merge_into(r, analyze_vocabulary(p.consequent));
            return r;
        }
    };
    return std::visit(V{}, s);
}

}  // namespace alba
