#include "naive.hpp"

#include <set>

namespace naive {

using alba::Formula;
using alba::Op;

Frame from(const alba::FiniteFrame& F) {
    Frame out;
    out.n = F.size;
    out.R.assign(F.size, std::vector<bool>(F.size, false));
    out.Rp = out.R;
    for (auto [u, v] : F.r_pairs()) out.R[u][v] = true;
    for (auto [u, v] : F.rp_pairs()) out.Rp[u][v] = true;
    return out;
}

bool sat(const Frame& F, const Model& M, int w, const Formula& f) {
    auto some = [&](auto edge) {
        for (int v = 0; v < F.n; ++v)
            if (edge(v) && sat(F, M, v, f.child(0))) return true;
        return false;
    };
    auto every = [&](auto edge) {
        for (int v = 0; v < F.n; ++v)
            if (edge(v) && !sat(F, M, v, f.child(0))) return false;
        return true;
    };
    switch (f.op()) {
        case Op::Var: return M.props.at(f.name())[w];
        case Op::Nom: return M.noms.at(f.name()) == w;
        case Op::Bot: return false;
        case Op::Top: return true;
        case Op::Not: return !sat(F, M, w, f.child(0));
        case Op::And: return sat(F, M, w, f.child(0)) && sat(F, M, w, f.child(1));
        case Op::Or: return sat(F, M, w, f.child(0)) || sat(F, M, w, f.child(1));
        case Op::Imp: return !sat(F, M, w, f.child(0)) || sat(F, M, w, f.child(1));
        case Op::Dia: return some([&](int v) { return F.Rp[w][v]; });
        case Op::Box: return every([&](int v) { return F.Rp[w][v]; });
        case Op::SDia: return some([&](int v) { return F.R[v][w]; });
        case Op::SBox: return every([&](int v) { return F.R[v][w]; });
        case Op::BDia: return some([&](int v) { return F.Rp[v][w]; });
        case Op::BBox: return every([&](int v) { return F.Rp[v][w]; });
        case Op::SBDia: return some([&](int v) { return F.R[w][v]; });
        case Op::SBBox: return every([&](int v) { return F.R[w][v]; });
    }
    return false;
}

bool holds(const Frame& F, const Model& M, const alba::Inequality& i) {
    for (int w = 0; w < F.n; ++w) {
        if (!sat(F, M, w, i.rhs)) {
            if (i.rel == alba::Rel::Leq) {
                if (sat(F, M, w, i.lhs)) return false;
            } else {
                // R[V(lhs)] inside V(rhs): no R-predecessor of w satisfies lhs
                for (int v = 0; v < F.n; ++v)
                    if (F.R[v][w] && sat(F, M, v, i.lhs)) return false;
            }
        }
    }
    return true;
}

namespace {

bool all(const Frame& F, const Model& M, const std::vector<alba::Inequality>& is) {
    for (const auto& i : is)
        if (!holds(F, M, i)) return false;
    return true;
}

std::vector<bool> subset(int n, unsigned bits) {
    std::vector<bool> s(n);
    for (int w = 0; w < n; ++w) s[w] = (bits >> w) & 1;
    return s;
}

bool exists_witness(const Frame& F, Model& M, const std::vector<std::string>& bound, std::size_t k,
                    const std::vector<alba::Inequality>& is) {
    if (k == bound.size()) return all(F, M, is);
    for (unsigned b = 0; b < (1u << F.n); ++b) {
        M.props[bound[k]] = subset(F.n, b);
        if (exists_witness(F, M, bound, k + 1, is)) return true;
    }
    return false;
}

}  // namespace

bool holds(const Frame& F, const Model& M, const alba::Statement& s) {
    if (auto* i = std::get_if<alba::Inequality>(&s)) return holds(F, M, *i);
    if (auto* m = std::get_if<alba::MetaConjunction>(&s)) return all(F, M, m->items);
    if (auto* q = std::get_if<alba::QuasiInequality>(&s)) return !all(F, M, q->antecedent) || all(F, M, q->consequent);
    const auto& p = std::get<alba::Pi2Statement>(s);
    if (!all(F, M, p.antecedent)) return true;
    Model W = M;
    return exists_witness(F, W, p.bound, 0, p.consequent);
}

bool valid(const Frame& F, const alba::Statement& s) {
    alba::VocabularyReport v = alba::analyze_vocabulary(s);
    std::set<std::string> bound;
    if (auto* p = std::get_if<alba::Pi2Statement>(&s)) bound.insert(p->bound.begin(), p->bound.end());
    std::vector<std::string> vars, noms(v.nominals.begin(), v.nominals.end());
    for (const auto& x : v.prop_vars)
        if (!bound.count(x)) vars.push_back(x);
    const unsigned long long valuations = 1ull << (F.n * vars.size());
    long long assignments = 1;
    for (std::size_t k = 0; k < noms.size(); ++k) assignments *= F.n;
    Model M;
    for (unsigned long long code = 0; code < valuations; ++code) {
        for (std::size_t k = 0; k < vars.size(); ++k)
            M.props[vars[k]] = subset(F.n, static_cast<unsigned>((code >> (k * F.n)) & ((1u << F.n) - 1)));
        for (long long a = 0; a < assignments; ++a) {
            long long rest = a;
            for (const auto& nm : noms) {
                M.noms[nm] = static_cast<int>(rest % F.n);
                rest /= F.n;
            }
            if (!holds(F, M, s)) return false;
        }
    }
    return true;
}

bool fo(const Frame& F, const alba::FOFormula& f, std::map<std::string, int>& env,
        const std::map<std::string, std::vector<bool>>& preds) {
    using K = alba::FOKind;
    switch (f.kind()) {
        case K::True: return true;
        case K::False: return false;
        case K::Rel: return F.R[env.at(f.a())][env.at(f.b())];
        case K::RelP: return F.Rp[env.at(f.a())][env.at(f.b())];
        case K::Eq: return env.at(f.a()) == env.at(f.b());
        case K::Pred: return preds.at(f.name())[env.at(f.a())];
        case K::Not: return !fo(F, f.child(0), env, preds);
        case K::And: return fo(F, f.child(0), env, preds) && fo(F, f.child(1), env, preds);
        case K::Or: return fo(F, f.child(0), env, preds) || fo(F, f.child(1), env, preds);
        case K::Imp: return !fo(F, f.child(0), env, preds) || fo(F, f.child(1), env, preds);
        case K::Forall:
        case K::Exists: {
            auto saved = env.find(f.name()) == env.end() ? -1 : env[f.name()];
            bool forall = f.kind() == K::Forall;
            bool result = forall;
            for (int w = 0; w < F.n; ++w) {
                env[f.name()] = w;
                if (fo(F, f.child(0), env, preds) != forall) {
                    result = !forall;
                    break;
                }
            }
            if (saved < 0)
                env.erase(f.name());
            else
                env[f.name()] = saved;
            return result;
        }
    }
    return false;
}

bool fo_valid(const Frame& F, const alba::FOFormula& f) {
    alba::FOFormula closed = f;
    for (const auto& x : alba::free_vars(f)) closed = alba::FOFormula::forall(x, closed);
    std::vector<std::string> ps;
    for (const auto& p : alba::predicates(f)) ps.push_back(p);
    const unsigned long long total = 1ull << (F.n * ps.size());
    std::map<std::string, std::vector<bool>> preds;
    std::map<std::string, int> env;
    for (unsigned long long code = 0; code < total; ++code) {
        for (std::size_t k = 0; k < ps.size(); ++k)
            preds[ps[k]] = subset(F.n, static_cast<unsigned>((code >> (k * F.n)) & ((1u << F.n) - 1)));
        if (!fo(F, closed, env, preds)) return false;
    }
    return true;
}

}  // namespace naive
