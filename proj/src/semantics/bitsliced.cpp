// Validity of a statement on one frame for all valuations at once. Bit i of a
// word array is valuation number i; bit k*n+w of i is the value of variable k at
// world w. Every formula value is n word arrays, one per world.
#include <algorithm>
#include <map>
#include <set>

#include "alba/semantics.hpp"

namespace alba {

using simd::Kernels;
using simd::Word;

struct BitslicedStatement::Impl {
    struct Node {
        Op op;
        int a = -1, b = -1;
        int leaf = -1;  // variable or nominal index
    };
    std::vector<Node> nodes;
    std::map<Formula, int> ids;
    std::vector<std::string> vars;  // free vars, then bound vars
    std::vector<std::string> nominals;
    int bound = 0;
    std::vector<std::pair<int, int>> ante, cons;
    bool has_antecedent = false;
    int max_bits;

    int add(const Formula& f) {
        auto it = ids.find(f);
        if (it != ids.end()) return it->second;
        Node n{f.op()};
        if (f.op() == Op::Var)
            n.leaf = static_cast<int>(std::find(vars.begin(), vars.end(), f.name()) - vars.begin());
        else if (f.op() == Op::Nom)
            n.leaf = static_cast<int>(std::find(nominals.begin(), nominals.end(), f.name()) - nominals.begin());
        if (arity(f.op()) >= 1) n.a = add(f.child(0));
        if (arity(f.op()) == 2) n.b = add(f.child(1));
        nodes.push_back(n);
        int id = static_cast<int>(nodes.size()) - 1;
        ids.emplace(f, id);
        return id;
    }

    std::pair<int, int> add(const Inequality& i) {
        int l = add(i.rel == Rel::Prec ? sdia(i.lhs) : i.lhs);
        return {l, add(i.rhs)};
    }
};

BitslicedStatement::BitslicedStatement(const Statement& s, int max_bits) : impl_(std::make_unique<Impl>()) {
    Impl& m = *impl_;
    m.max_bits = max_bits;
    VocabularyReport v = analyze_vocabulary(s);
    std::set<std::string> bound;
    if (auto* p = std::get_if<Pi2Statement>(&s)) bound.insert(p->bound.begin(), p->bound.end());
    for (const auto& x : v.prop_vars)
        if (!bound.count(x)) m.vars.push_back(x);
    for (const auto& x : v.prop_vars)
        if (bound.count(x)) {
            m.vars.push_back(x);
            ++m.bound;
        }
    m.nominals.assign(v.nominals.begin(), v.nominals.end());
    auto add_all = [&](const std::vector<Inequality>& is, std::vector<std::pair<int, int>>& into) {
        for (const auto& i : is) into.push_back(m.add(i));
    };
    if (auto* i = std::get_if<Inequality>(&s)) {
        add_all({*i}, m.cons);
    } else if (auto* mc = std::get_if<MetaConjunction>(&s)) {
        add_all(mc->items, m.cons);
    } else if (auto* q = std::get_if<QuasiInequality>(&s)) {
        m.has_antecedent = true;
        add_all(q->antecedent, m.ante);
        add_all(q->consequent, m.cons);
    } else {
        const auto& p = std::get<Pi2Statement>(s);
        m.has_antecedent = true;
        add_all(p.antecedent, m.ante);
        add_all(p.consequent, m.cons);
    }
}

BitslicedStatement::~BitslicedStatement() = default;
BitslicedStatement::BitslicedStatement(BitslicedStatement&&) noexcept = default;
BitslicedStatement& BitslicedStatement::operator=(BitslicedStatement&&) noexcept = default;

int BitslicedStatement::var_count() const { return static_cast<int>(impl_->vars.size()); }

namespace {

constexpr Word kPattern[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                              0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
constexpr Word kOnes = ~Word{0};

const std::vector<WorldSet>& relation(const FiniteFrame& F, Op op) {
    switch (op) {
        case Op::Dia:
        case Op::Box: return F.rp_succ;
        case Op::SDia:
        case Op::SBox: return F.r_pred;
        case Op::BDia:
        case Op::BBox: return F.rp_pred;
        default: return F.r_succ;
    }
}

}  // namespace

bool BitslicedStatement::valid_on(const FiniteFrame& F, const Kernels& k) const {
    const Impl& m = *impl_;
    const int n = F.size;
    const int nv = static_cast<int>(m.vars.size());
    const int bits = n * nv;
    if (bits > m.max_bits)
        throw BudgetExceeded(std::to_string(bits) + " valuation bits exceed the bound " + std::to_string(m.max_bits));
    const std::size_t V = std::size_t{1} << bits;
    const std::size_t W = V >= 64 ? V / 64 : 1;
    const Word tail = V >= 64 ? kOnes : (Word{1} << V) - 1;
    const std::size_t stride = static_cast<std::size_t>(n) * W;

    thread_local std::vector<Word> buf;
    const std::size_t scratch = 4 * W;
    buf.assign(m.nodes.size() * stride + scratch, 0);
    Word* tmp = buf.data() + m.nodes.size() * stride;
    Word* bad = tmp + W;
    Word* ante_ok = bad + W;
    Word* cons_ok = ante_ok + W;
    auto val = [&](int node, int w) { return buf.data() + static_cast<std::size_t>(node) * stride + w * W; };

    const std::size_t nk = m.nominals.size();
    std::vector<int> at(nk, 0);
    while (true) {
        for (std::size_t id = 0; id < m.nodes.size(); ++id) {
            const Impl::Node& nd = m.nodes[id];
            Word* d = val(static_cast<int>(id), 0);
            switch (nd.op) {
                case Op::Var:
                    for (int w = 0; w < n; ++w) {
                        int b = nd.leaf * n + w;
                        Word* dw = val(static_cast<int>(id), w);
                        if (b < 6) {
                            k.fill(dw, kPattern[b], W);
                        } else {
                            for (std::size_t j = 0; j < W; ++j) dw[j] = ((j >> (b - 6)) & 1) ? kOnes : 0;
                        }
                    }
                    break;
                case Op::Nom:
                    for (int w = 0; w < n; ++w) k.fill(val(static_cast<int>(id), w), at[nd.leaf] == w ? kOnes : 0, W);
                    break;
                case Op::Bot: k.fill(d, 0, stride); break;
                case Op::Top: k.fill(d, kOnes, stride); break;
                case Op::Not: k.not_(d, val(nd.a, 0), stride); break;
                case Op::And: k.and_(d, val(nd.a, 0), val(nd.b, 0), stride); break;
                case Op::Or: k.or_(d, val(nd.a, 0), val(nd.b, 0), stride); break;
                case Op::Imp:
                    k.andnot(d, val(nd.a, 0), val(nd.b, 0), stride);
                    k.not_(d, d, stride);
                    break;
                default: {
                    const auto& rel = relation(F, nd.op);
                    const bool dia = is_diamond(nd.op);
                    for (int w = 0; w < n; ++w) {
                        Word* dw = val(static_cast<int>(id), w);
                        k.fill(dw, dia ? 0 : kOnes, W);
                        for (int v = 0; v < n; ++v) {
                            if (!((rel[w] >> v) & 1)) continue;
                            if (dia)
                                k.or_(dw, dw, val(nd.a, v), W);
                            else
                                k.and_(dw, dw, val(nd.a, v), W);
                        }
                    }
                }
            }
        }
        auto group = [&](const std::vector<std::pair<int, int>>& is, Word* ok) {
            k.fill(ok, kOnes, W);
            for (auto [l, r] : is) {
                k.fill(bad, 0, W);
                for (int w = 0; w < n; ++w) {
                    k.andnot(tmp, val(l, w), val(r, w), W);
                    k.or_(bad, bad, tmp, W);
                }
                k.andnot(ok, ok, bad, W);
            }
        };
        group(m.ante, ante_ok);
        group(m.cons, cons_ok);

        if (m.bound == 0) {
            // valid iff no valuation satisfies the antecedent and breaks the consequent
            if (m.has_antecedent) {
                k.andnot(tmp, ante_ok, cons_ok, W);
                k.not_(tmp, tmp, W);
            } else {
                std::copy(cons_ok, cons_ok + W, tmp);
            }
            tmp[0] |= ~tail;
            if (!k.all_ones(tmp, W)) return false;
        } else {
            const int free_bits = n * (nv - m.bound);
            const std::size_t Vf = std::size_t{1} << free_bits;
            const std::size_t M = std::size_t{1} << (n * m.bound);
            if (Vf >= 64) {
                const std::size_t Wf = Vf / 64;
                for (std::size_t j = 1; j < M; ++j) k.or_(cons_ok, cons_ok, cons_ok + j * Wf, Wf);
                k.andnot(tmp, ante_ok, cons_ok, Wf);
                k.not_(tmp, tmp, Wf);
                if (!k.all_ones(tmp, Wf)) return false;
            } else {
                auto bit = [&](const Word* a, std::size_t i) { return (a[i / 64] >> (i % 64)) & 1; };
                for (std::size_t f = 0; f < Vf; ++f) {
                    if (!bit(ante_ok, f)) continue;
                    bool ex = false;
                    for (std::size_t j = 0; j < M && !ex; ++j) ex = bit(cons_ok, f + j * Vf);
                    if (!ex) return false;
                }
            }
        }

        std::size_t i = 0;
        while (i < nk && ++at[i] == n) at[i++] = 0;
        if (i == nk) break;
    }
    return true;
}

}  // namespace alba
