#include <algorithm>
#include <functional>

#include "alba/semantics.hpp"

namespace alba {

struct CompiledFO::Impl {
    struct Node {
        FOKind kind;
        int a = -1, b = -1;  // variable slots
        int pred = -1;
        int c0 = -1, c1 = -1;  // children
    };
    std::vector<Node> nodes;
    std::vector<std::string> free, preds;
    int slots = 0;
    int root = -1;

    int compile(const FOFormula& f, std::map<std::string, int>& env) {
        Node n{f.kind()};
        auto slot = [&](const std::string& x) { return env.at(x); };
        switch (f.kind()) {
            case FOKind::Rel:
            case FOKind::RelP:
            case FOKind::Eq:
                n.a = slot(f.a());
                n.b = slot(f.b());
                break;
            case FOKind::Pred:
                n.a = slot(f.a());
                n.pred = static_cast<int>(std::find(preds.begin(), preds.end(), f.name()) - preds.begin());
                break;
            case FOKind::Forall:
            case FOKind::Exists: {
                auto inner = env;
                n.a = slots++;
                inner[f.name()] = n.a;
                n.c0 = compile(f.child(0), inner);
                break;
            }
            default:
                if (f.arity() >= 1) n.c0 = compile(f.child(0), env);
                if (f.arity() == 2) n.c1 = compile(f.child(1), env);
        }
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }

    bool ev(int id, const FiniteFrame& F, int* env, const WorldSet* pv) const {
        const Node& n = nodes[id];
        switch (n.kind) {
            case FOKind::True: return true;
            case FOKind::False: return false;
            case FOKind::Rel: return F.r(env[n.a], env[n.b]);
            case FOKind::RelP: return F.rp(env[n.a], env[n.b]);
            case FOKind::Eq: return env[n.a] == env[n.b];
            case FOKind::Pred: return (pv[n.pred] >> env[n.a]) & 1;
            case FOKind::Not: return !ev(n.c0, F, env, pv);
            case FOKind::And: return ev(n.c0, F, env, pv) && ev(n.c1, F, env, pv);
            case FOKind::Or: return ev(n.c0, F, env, pv) || ev(n.c1, F, env, pv);
            case FOKind::Imp: return !ev(n.c0, F, env, pv) || ev(n.c1, F, env, pv);
            case FOKind::Forall:
                for (int w = 0; w < F.size; ++w) {
                    env[n.a] = w;
                    if (!ev(n.c0, F, env, pv)) return false;
                }
                return true;
            case FOKind::Exists:
                for (int w = 0; w < F.size; ++w) {
                    env[n.a] = w;
                    if (ev(n.c0, F, env, pv)) return true;
                }
                return false;
        }
        return false;
    }
};

CompiledFO::CompiledFO(const FOFormula& f) : impl_(std::make_unique<Impl>()) {
    Impl& m = *impl_;
    auto fv = free_vars(f);
    m.free.assign(fv.begin(), fv.end());
    auto ps = predicates(f);
    m.preds.assign(ps.begin(), ps.end());
    std::map<std::string, int> env;
    for (const auto& x : m.free) env[x] = m.slots++;
    m.root = m.compile(f, env);
}

CompiledFO::~CompiledFO() = default;
CompiledFO::CompiledFO(CompiledFO&&) noexcept = default;
CompiledFO& CompiledFO::operator=(CompiledFO&&) noexcept = default;

const std::vector<std::string>& CompiledFO::free_variables() const { return impl_->free; }
const std::vector<std::string>& CompiledFO::predicate_names() const { return impl_->preds; }

bool CompiledFO::eval(const FiniteFrame& F, const std::vector<int>& env, const std::vector<WorldSet>& preds) const {
    const Impl& m = *impl_;
    if (env.size() != m.free.size() || preds.size() != m.preds.size())
        throw std::invalid_argument("wrong number of variables or predicates");
    std::vector<int> slots(static_cast<std::size_t>(std::max(m.slots, 1)), 0);
    std::copy(env.begin(), env.end(), slots.begin());
    return m.ev(m.root, F, slots.data(), preds.data());
}

bool CompiledFO::valid_on(const FiniteFrame& F) const {
    const Impl& m = *impl_;
    std::vector<int> slots(static_cast<std::size_t>(std::max(m.slots, 1)), 0);
    std::vector<WorldSet> pv(m.preds.size(), 0);
    const std::size_t nf = m.free.size(), np = pv.size();
    const WorldSet all = F.all();
    // odometer over free variables, then over predicate extensions
    while (true) {
        std::vector<int> env(nf, 0);
        while (true) {
            std::copy(env.begin(), env.end(), slots.begin());
            if (!m.ev(m.root, F, slots.data(), pv.data())) return false;
            std::size_t k = 0;
            while (k < nf && ++env[k] == F.size) env[k++] = 0;
            if (k == nf) break;
        }
        std::size_t k = 0;
        while (k < np && pv[k] == all) pv[k++] = 0;
        if (k == np) break;
        ++pv[k];
    }
    return true;
}

bool eval_fo(const FiniteFrame& F, const FOFormula& f, const std::map<std::string, int>& env, const Valuation* V) {
    CompiledFO c(f);
    std::vector<int> e;
    for (const auto& x : c.free_variables()) {
        auto it = env.find(x);
        if (it == env.end()) throw UnboundSymbol("no world for variable " + x);
        if (it->second < 0 || it->second >= F.size) throw std::out_of_range("world out of range for " + x);
        e.push_back(it->second);
    }
    std::vector<WorldSet> p;
    for (const auto& name : c.predicate_names()) {
        if (!V || !V->props.count(name)) throw UnboundSymbol("no extension for P_" + name);
        p.push_back(V->props.at(name) & F.all());
    }
    return c.eval(F, e, p);
}

}  // namespace alba
