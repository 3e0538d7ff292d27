#include <algorithm>

#include "alba/semantics.hpp"

namespace alba {

namespace {

WorldSet some(const FiniteFrame& F, const std::vector<WorldSet>& succ, WorldSet a) {
    WorldSet out = 0;
    for (int w = 0; w < F.size; ++w)
        if (succ[w] & a) out |= WorldSet{1} << w;
    return out;
}

WorldSet every(const FiniteFrame& F, const std::vector<WorldSet>& succ, WorldSet a) {
    WorldSet out = 0;
    for (int w = 0; w < F.size; ++w)
        if ((succ[w] & ~a) == 0) out |= WorldSet{1} << w;
    return out;
}

}  // namespace

WorldSet extension(const FiniteFrame& F, const Valuation& V, const Formula& f) {
    const WorldSet all = F.all();
    switch (f.op()) {
        case Op::Var: {
            auto it = V.props.find(f.name());
            if (it == V.props.end()) throw UnboundSymbol("no value for " + f.name());
            return it->second & all;
        }
        case Op::Nom: {
            auto it = V.nominals.find(f.name());
            if (it == V.nominals.end()) throw UnboundSymbol("no value for @" + f.name());
            return WorldSet{1} << it->second;
        }
        case Op::Bot: return 0;
        case Op::Top: return all;
        case Op::Not: return all & ~extension(F, V, f.child(0));
        case Op::And: return extension(F, V, f.child(0)) & extension(F, V, f.child(1));
        case Op::Or: return extension(F, V, f.child(0)) | extension(F, V, f.child(1));
        case Op::Imp: return all & (~extension(F, V, f.child(0)) | extension(F, V, f.child(1)));
        case Op::Dia: return some(F, F.rp_succ, extension(F, V, f.child(0)));
        case Op::Box: return every(F, F.rp_succ, extension(F, V, f.child(0)));
        case Op::SDia: return some(F, F.r_pred, extension(F, V, f.child(0)));
        case Op::SBox: return every(F, F.r_pred, extension(F, V, f.child(0)));
        case Op::BDia: return some(F, F.rp_pred, extension(F, V, f.child(0)));
        case Op::BBox: return every(F, F.rp_pred, extension(F, V, f.child(0)));
        case Op::SBDia: return some(F, F.r_succ, extension(F, V, f.child(0)));
        case Op::SBBox: return every(F, F.r_succ, extension(F, V, f.child(0)));
    }
    return 0;
}

bool eval_formula(const FiniteFrame& F, const Valuation& V, int w, const Formula& f) {
    return (extension(F, V, f) >> w) & 1;
}

bool holds(const FiniteFrame& F, const Valuation& V, const Inequality& i) {
    WorldSet l = extension(F, V, i.lhs);
    if (i.rel == Rel::Prec) l = F.r_image(l);
    return (l & ~extension(F, V, i.rhs)) == 0;
}

namespace {

bool holds_all(const FiniteFrame& F, const Valuation& V, const std::vector<Inequality>& is) {
    return std::all_of(is.begin(), is.end(), [&](const Inequality& i) { return holds(F, V, i); });
}

std::vector<WorldSet> witnesses(const FiniteFrame& F, const AdmissibleFamily* family) {
    if (family) return family->sets;
    std::vector<WorldSet> out;
    for (WorldSet s = 0; s <= F.all(); ++s) out.push_back(s);
    return out;
}

// calls fn for every assignment of values to names; stops when fn returns true
template <class Fn>
bool any_assignment(const std::vector<std::string>& names, const std::vector<WorldSet>& values, Valuation& V, Fn&& fn,
                    std::size_t k = 0) {
    if (k == names.size()) return fn();
    for (WorldSet v : values) {
        V.props[names[k]] = v;
        if (any_assignment(names, values, V, fn, k + 1)) return true;
    }
    return false;
}

}  // namespace

bool holds_statement(const FiniteFrame& F, const Valuation& V, const Statement& s, const AdmissibleFamily* family) {
    if (auto* i = std::get_if<Inequality>(&s)) return holds(F, V, *i);
    if (auto* m = std::get_if<MetaConjunction>(&s)) return holds_all(F, V, m->items);
    if (auto* q = std::get_if<QuasiInequality>(&s))
        return !holds_all(F, V, q->antecedent) || holds_all(F, V, q->consequent);
    const auto& p = std::get<Pi2Statement>(s);
    if (!holds_all(F, V, p.antecedent)) return true;
    Valuation W = V;
    auto values = witnesses(F, family);
    return any_assignment(p.bound, values, W, [&] { return holds_all(F, W, p.consequent); });
}

namespace {

struct Symbols {
    std::vector<std::string> free, bound, nominals;
};

Symbols symbols(const Statement& s) {
    Symbols out;
    VocabularyReport v = analyze_vocabulary(s);
    std::set<std::string> bound;
    if (auto* p = std::get_if<Pi2Statement>(&s)) bound.insert(p->bound.begin(), p->bound.end());
    for (const auto& x : v.prop_vars)
        (bound.count(x) ? out.bound : out.free).push_back(x);
    out.nominals.assign(v.nominals.begin(), v.nominals.end());
    return out;
}

void check_budget(const FiniteFrame& F, const Symbols& sy, const ValidityOptions& o) {
    int vars = static_cast<int>(sy.free.size() + sy.bound.size());
    if (F.size > o.max_size)
        throw BudgetExceeded("frame of size " + std::to_string(F.size) + " exceeds the bound " +
                             std::to_string(o.max_size));
    if (vars > o.max_vars)
        throw BudgetExceeded(std::to_string(vars) + " variables exceed the bound " + std::to_string(o.max_vars));
}

}  // namespace

bool valid_reference(const FiniteFrame& F, const Statement& s, const ValidityOptions& opts) {
    Symbols sy = symbols(s);
    check_budget(F, sy, opts);
    const AdmissibleFamily* fam = nullptr;
    if (opts.mode == Mode::Admissible) {
        if (!opts.family) throw std::invalid_argument("admissible validity needs a family");
        if (auto why = family_violation(F, *opts.family)) throw std::invalid_argument(*why);
        fam = opts.family;
    }
    auto values = witnesses(F, fam);
    Valuation V;
    std::size_t nk = sy.nominals.size();
    std::vector<int> at(nk, 0);
    while (true) {
        for (std::size_t k = 0; k < nk; ++k) V.nominals[sy.nominals[k]] = at[k];
        bool broken = any_assignment(sy.free, values, V, [&] { return !holds_statement(F, V, s, fam); });
        if (broken) return false;
        std::size_t k = 0;
        while (k < nk && ++at[k] == F.size) at[k++] = 0;
        if (k == nk) break;
    }
    return true;
}

bool valid(const FiniteFrame& F, const Statement& s, const ValidityOptions& opts) {
    if (opts.mode == Mode::Admissible) return valid_reference(F, s, opts);
    check_budget(F, symbols(s), opts);
    return BitslicedStatement(s).valid_on(F);
}

}  // namespace alba
