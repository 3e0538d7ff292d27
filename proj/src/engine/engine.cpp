#include "alba/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "alba/syntax.hpp"
#include "strategy.hpp"

namespace alba {

using namespace detail;

void DerivationTrace::add(TraceStep s) {
    s.step = static_cast<int>(steps.size());
    steps.push_back(std::move(s));
}

std::string DerivationTrace::to_jsonl() const {
    std::string out;
    for (const auto& s : steps) {
        nlohmann::ordered_json j;
        j["step"] = s.step;
        j["stage"] = s.stage;
        j["rule"] = s.rule;
        j["member"] = s.member;
        j["half"] = s.half;
        j["premises"] = s.premises;
        auto list = [](const std::vector<Inequality>& is) {
            nlohmann::ordered_json a = nlohmann::ordered_json::array();
            for (const auto& i : is) a.push_back(render(i));
            return a;
        };
        j["consumed"] = list(s.consumed);
        j["produced"] = list(s.produced);
        j["fresh"] = s.fresh;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string System::fresh_nominal() { return "_" + std::to_string(fresh_counter++); }

std::vector<QuasiInequality> preprocess(const QuasiInequality& q, DerivationTrace* trace) {
    Pre pre{trace, 0};
    QuasiInequality w;
    w.antecedent = pre.split_all(pre.distribute_all(q.antecedent));
    w.consequent = pre.split_all(pre.distribute_all(q.consequent));
    for (const auto& [p, pol] : uniform_variables(w)) {
        Formula value = pol == Polarity::One ? Formula::bot() : Formula::top();
        QuasiInequality next;
        for (const auto& i : w.antecedent) next.antecedent.push_back(substitute(i, value, p));
        for (const auto& i : w.consequent) next.consequent.push_back(substitute(i, value, p));
        pre.log(pol == Polarity::One ? "eliminate-bot" : "eliminate-top", all_of(w), all_of(next));
        w = std::move(next);
    }
    w.antecedent = pre.rewrite_prec(w.antecedent);
    w.consequent = pre.rewrite_prec(w.consequent);
    std::vector<QuasiInequality> out;
    for (const auto& c : w.consequent) out.push_back({w.antecedent, {c}});
    return out;
}

System first_approximation(const QuasiInequality& q, int first_fresh) {
    if (q.consequent.size() != 1) throw std::invalid_argument("first approximation needs a single consequent");
    System s;
    s.fresh_counter = std::max(first_fresh, fresh_floor(all_of(q)));
    Formula i0 = Formula::nom(s.fresh_nominal());
    Formula i1 = Formula::nom(s.fresh_nominal());
    s.inequalities = q.antecedent;
    const Inequality& c = q.consequent.front();
    s.inequalities.push_back(leq(i0, c.lhs));
    s.inequalities.push_back(leq(c.rhs, neg(i1)));
    s.goal = leq(i0, neg(i1));
    return s;
}

System apply_rule(const System& s, const RuleInstance& r) {
    if (r.index >= s.inequalities.size()) throw std::out_of_range("apply_rule: no inequality at that index");
    System out = s;
    std::vector<std::string> fresh;
    for (int k = 0; k < fresh_count(r.rule); ++k) fresh.push_back(out.fresh_nominal());
    auto res = apply_local(r.rule, s.inequalities[r.index], fresh);
    if (!res)
        throw std::invalid_argument(std::string(rule_name(r.rule)) + " does not match " +
                                    render(s.inequalities[r.index]));
    out.inequalities = splice(s.inequalities, {r.index}, *res);
    return out;
}

System eliminate(const System& s, const std::string& p, Side side) {
    System out = s;
    out.inequalities = ackermann(s.inequalities, p, side);
    return out;
}

namespace {

// Completes a possibly partial certificate: missing variables get 1 and sit at the bottom.
Certificate complete(Certificate c, const std::set<std::string>& vars) {
    std::vector<std::string> missing;
    for (const auto& p : vars) {
        if (!c.eps.has(p)) c.eps.assignment[p] = Polarity::One;
        if (std::find(c.order.begin(), c.order.end(), p) == c.order.end()) missing.push_back(p);
    }
    c.order.insert(c.order.begin(), missing.begin(), missing.end());
    return c;
}

}  // namespace

AlbaOutcome run_alba(const QuasiInequality& input, const AlbaOptions& opts) {
    AlbaOutcome out;
    QuasiInequality q = input;
    auto vars = analyze_vocabulary(Statement(q)).prop_vars;

    Certificate cert;
    if (opts.certificate) {
        cert = *opts.certificate;
    } else {
        std::optional<Certificate> found;
        try {
            found = find_certificate(q);
        } catch (const std::invalid_argument&) {
        }
        if (found) {
            cert = *found;
            out.certified = true;
        }
    }
    cert = complete(cert, vars);
    out.certificate = cert;

    DerivationTrace& tr = out.trace;
    std::size_t pre_start = tr.steps.size();
    auto members = preprocess(q, &tr);
    for (std::size_t k = pre_start; k < tr.steps.size(); ++k) tr.steps[k].half = opts.half;

    int counter = fresh_floor(all_of(q));
    for (std::size_t m = 0; m < members.size(); ++m) {
        Runner run{tr, static_cast<int>(m), opts.half, first_approximation(members[m], counter)};
        {
            // the first step rebuilds the whole initial system
            TraceStep t;
            t.stage = "approximation";
            t.rule = "first-approximation";
            t.member = run.member;
            t.half = opts.half;
            t.produced = run.sys.inequalities;
            for (int n = counter; n < run.sys.fresh_counter; ++n) t.fresh.push_back("_" + std::to_string(n));
            tr.add(std::move(t));
        }
        run.goal_side();
        run.solve(cert.eps);
        while (true) {
            auto rest = run.remaining();
            if (rest.empty()) break;
            bool done = false;
            // maximal variable first, in its preferred direction
            for (auto it = cert.order.rbegin(); it != cert.order.rend() && !done; ++it)
                if (rest.count(*it)) {
                    done = run.eliminate_var(*it, preferred(cert.eps, *it));
                    break;
                }
            for (auto it = cert.order.rbegin(); it != cert.order.rend() && !done; ++it) {
                if (!rest.count(*it)) continue;
                Side s = preferred(cert.eps, *it);
                done = run.eliminate_var(*it, s) ||
                       run.eliminate_var(*it, s == Side::Right ? Side::Left : Side::Right);
            }
            if (!done) {
                out.success = false;
                out.stuck_system = run.sys;
                out.unresolved.assign(rest.begin(), rest.end());
                out.message = "member " + std::to_string(m) + ": no Ackermann step applies";
                return out;
            }
            run.solve(cert.eps);
        }
        counter = run.sys.fresh_counter;
        QuasiInequality raw = normalize({run.sys.inequalities, {run.sys.goal}});
        out.raw_quasis.push_back(raw);
    }
    for (const auto& raw : out.raw_quasis)
        out.pure_quasis.push_back(opts.simplify_output ? simplify_pure(raw, &tr) : canonical_nominals(raw));
    out.success = true;
    return out;
}

// --- output simplification --------------------------------------------------

namespace {

std::size_t mentions(const Ineqs& is, const std::string& n) {
    std::size_t c = 0;
    for (const auto& i : is) c += contains_nominal(i, n) ? 1 : 0;
    return c;
}

// D(@j) with D a possibly empty chain of diamonds; returns the nominal
std::optional<std::string> diamond_chain(const Formula& f) {
    if (f.op() == Op::Nom) return f.name();
    if (is_diamond(f.op())) return diamond_chain(f.child(0));
    return std::nullopt;
}

std::optional<std::string> box_chain(const Formula& f) {
    if (is_neg_nominal(f)) return f.child(0).name();
    if (is_box(f.op())) return box_chain(f.child(0));
    return std::nullopt;
}

Formula replace_tail(const Formula& chain, const Formula& tail) {
    if (chain.op() == Op::Nom || is_neg_nominal(chain)) return tail;
    return Formula::make(chain.op(), replace_tail(chain.child(0), tail));
}

struct Simplifier {
    Ineqs ante;
    Inequality cons;
    DerivationTrace* trace;

    void log(const char* rule, Ineqs consumed, Ineqs produced) {
        if (!trace) return;
        TraceStep s;
        s.stage = "output";
        s.rule = rule;
        s.consumed = std::move(consumed);
        s.produced = std::move(produced);
        trace->add(std::move(s));
    }

    Ineqs everything() const {
        Ineqs all = ante;
        all.push_back(cons);
        return all;
    }

    void replace(std::size_t a, std::size_t b, const Inequality& with) {
        Ineqs next;
        for (std::size_t k = 0; k < ante.size(); ++k) {
            if (k == std::min(a, b)) next.push_back(with);
            if (k != a && k != b) next.push_back(ante[k]);
        }
        ante = std::move(next);
    }

    // @i <= D @j  &  @j <= psi   ~>  @i <= D psi
    bool merge_diamond() {
        Ineqs all = everything();
        for (std::size_t a = 0; a < ante.size(); ++a) {
            const Inequality& x = ante[a];
            if (x.lhs.op() != Op::Nom || x.rhs.op() == Op::Nom) continue;
            auto j = diamond_chain(x.rhs);
            if (!j || *j == x.lhs.name() || mentions(all, *j) != 2) continue;
            for (std::size_t b = 0; b < ante.size(); ++b) {
                const Inequality& y = ante[b];
                if (b == a || y.lhs.op() != Op::Nom || y.lhs.name() != *j || contains_nominal(y.rhs, *j)) continue;
                Inequality merged = leq(x.lhs, replace_tail(x.rhs, y.rhs));
                log("merge-diamond", {x, y}, {merged});
                replace(a, b, merged);
                return true;
            }
        }
        return false;
    }

    // B ~@j <= ~@i  &  theta <= ~@j   ~>  B theta <= ~@i
    bool merge_box() {
        Ineqs all = everything();
        for (std::size_t a = 0; a < ante.size(); ++a) {
            const Inequality& x = ante[a];
            if (!is_neg_nominal(x.rhs) || is_neg_nominal(x.lhs)) continue;
            auto j = box_chain(x.lhs);
            if (!j || *j == x.rhs.child(0).name() || mentions(all, *j) != 2) continue;
            for (std::size_t b = 0; b < ante.size(); ++b) {
                const Inequality& y = ante[b];
                if (b == a || !is_neg_nominal(y.rhs) || y.rhs.child(0).name() != *j || contains_nominal(y.lhs, *j))
                    continue;
                Inequality merged = leq(replace_tail(x.lhs, y.lhs), x.rhs);
                log("merge-box", {x, y}, {merged});
                replace(a, b, merged);
                return true;
            }
        }
        return false;
    }

    // @j -> ~@k <= ~@i  &  @j <= a  &  b <= ~@k   ~>  a -> b <= ~@i
    bool merge_imp() {
        Ineqs all = everything();
        for (std::size_t a = 0; a < ante.size(); ++a) {
            const Inequality& x = ante[a];
            if (!is_neg_nominal(x.rhs) || x.lhs.op() != Op::Imp) continue;
            const Formula& l = x.lhs.child(0);
            const Formula& r = x.lhs.child(1);
            if (l.op() != Op::Nom || !is_neg_nominal(r)) continue;
            const std::string& j = l.name();
            const std::string& k = r.child(0).name();
            const std::string& i = x.rhs.child(0).name();
            if (j == k || j == i || k == i || mentions(all, j) != 2 || mentions(all, k) != 2) continue;
            std::optional<std::size_t> bj, bk;
            for (std::size_t b = 0; b < ante.size(); ++b) {
                if (b == a) continue;
                const Inequality& y = ante[b];
                if (y.lhs.op() == Op::Nom && y.lhs.name() == j && !contains_nominal(y.rhs, j) &&
                    !contains_nominal(y.rhs, k))
                    bj = b;
                if (is_neg_nominal(y.rhs) && y.rhs.child(0).name() == k && !contains_nominal(y.lhs, k) &&
                    !contains_nominal(y.lhs, j))
                    bk = b;
            }
            if (!bj || !bk || *bj == *bk) continue;
            Inequality merged = leq(imp(ante[*bj].rhs, ante[*bk].lhs), x.rhs);
            log("merge-imp", {x, ante[*bj], ante[*bk]}, {merged});
            Ineqs next;
            std::size_t first = std::min({a, *bj, *bk});
            for (std::size_t n = 0; n < ante.size(); ++n) {
                if (n == first) next.push_back(merged);
                if (n != a && n != *bj && n != *bk) next.push_back(ante[n]);
            }
            ante = std::move(next);
            return true;
        }
        return false;
    }

    // alpha <= ~@j in the consequent with phi <= ~@j the only antecedent mentioning j
    bool drop_right() {
        if (!is_neg_nominal(cons.rhs)) return false;
        const std::string& j = cons.rhs.child(0).name();
        if (contains_nominal(cons.lhs, j)) return false;
        std::optional<std::size_t> at;
        for (std::size_t k = 0; k < ante.size(); ++k)
            if (contains_nominal(ante[k], j)) {
                if (at) return false;
                at = k;
            }
        if (!at) return false;
        const Inequality& y = ante[*at];
        if (!is_neg_nominal(y.rhs) || y.rhs.child(0).name() != j || contains_nominal(y.lhs, j)) return false;
        Inequality c = leq(cons.lhs, y.lhs);
        log("eliminate-nominal-right", {y, cons}, {c});
        ante.erase(ante.begin() + static_cast<std::ptrdiff_t>(*at));
        cons = c;
        return true;
    }

    // @i <= chi in the consequent with @i <= psi the only antecedent mentioning i
    bool drop_left() {
        if (cons.lhs.op() != Op::Nom) return false;
        const std::string& i = cons.lhs.name();
        if (contains_nominal(cons.rhs, i)) return false;
        std::optional<std::size_t> at;
        for (std::size_t k = 0; k < ante.size(); ++k)
            if (contains_nominal(ante[k], i)) {
                if (at) return false;
                at = k;
            }
        if (!at) return false;
        const Inequality& y = ante[*at];
        if (y.lhs.op() != Op::Nom || y.lhs.name() != i || contains_nominal(y.rhs, i)) return false;
        Inequality c = leq(y.rhs, cons.rhs);
        log("eliminate-nominal-left", {y, cons}, {c});
        ante.erase(ante.begin() + static_cast<std::ptrdiff_t>(*at));
        cons = c;
        return true;
    }
};

std::string canonical_name(std::size_t k) {
    static const char* base[] = {"i", "j", "k", "l", "m", "n"};
    std::string s = base[k % 6];
    if (k >= 6) s += std::to_string(k / 6);
    return s;
}

void collect(const Formula& f, std::vector<std::string>& order) {
    if (f.op() == Op::Nom) {
        if (std::find(order.begin(), order.end(), f.name()) == order.end()) order.push_back(f.name());
        return;
    }
    for (int c = 0; c < arity(f.op()); ++c) collect(f.child(c), order);
}

}  // namespace

QuasiInequality canonical_nominals(const QuasiInequality& q) {
    std::vector<std::string> order;
    for (const auto& i : all_of(q)) {
        collect(i.lhs, order);
        collect(i.rhs, order);
    }
    // two phases so that a target name never collides with a source name
    auto rename = [](const Ineqs& is, const std::string& from, const std::string& to) {
        Ineqs out;
        for (const auto& i : is) out.push_back(substitute_nominal(i, Formula::nom(to), from));
        return out;
    };
    QuasiInequality r = q;
    for (std::size_t k = 0; k < order.size(); ++k) {
        r.antecedent = rename(r.antecedent, order[k], "#" + std::to_string(k));
        r.consequent = rename(r.consequent, order[k], "#" + std::to_string(k));
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
        r.antecedent = rename(r.antecedent, "#" + std::to_string(k), canonical_name(k));
        r.consequent = rename(r.consequent, "#" + std::to_string(k), canonical_name(k));
    }
    return r;
}

QuasiInequality simplify_pure(const QuasiInequality& q, DerivationTrace* trace) {
    if (q.consequent.size() != 1) return canonical_nominals(q);
    Simplifier s{{}, q.consequent.front(), trace};
    for (const auto& i : q.antecedent)
        if (!is_trivial(i)) s.ante.push_back(i);
    while (s.merge_diamond() || s.merge_box() || s.merge_imp() || s.drop_right() || s.drop_left()) {
    }
    return canonical_nominals(normalize({s.ante, {s.cons}}));
}

// --- monitor and replay ------------------------------------------------------

TopologyVerdict topology_of(const std::vector<Inequality>& s) {
    TopologyVerdict v;
    for (const auto& i : s) {
        if (is_pure(i)) continue;
        if (!syntactic_polarity(i.lhs, Sign::Plus).closed || !syntactic_polarity(i.rhs, Sign::Plus).open) {
            v.correct = false;
            v.offending = render(i);
            return v;
        }
    }
    return v;
}

namespace {

bool replayable(const TraceStep& s) {
    return s.stage == "approximation" || s.stage == "reduction" || s.stage == "ackermann";
}

Ineqs replay_step(const Ineqs& sys, const TraceStep& s) {
    for (std::size_t k = 0; k < s.premises.size(); ++k) {
        if (s.premises[k] >= sys.size() || k >= s.consumed.size() || sys[s.premises[k]] != s.consumed[k])
            throw std::runtime_error("replay: step " + std::to_string(s.step) + " does not match the system");
    }
    return splice(sys, s.premises, s.produced);
}

}  // namespace

std::vector<Inequality> replay(const DerivationTrace& tr, int member, int half) {
    Ineqs sys;
    for (const auto& s : tr.steps)
        if (replayable(s) && s.member == member && s.half == half) sys = replay_step(sys, s);
    return sys;
}

TopologyReport check_topological_correctness(const DerivationTrace& tr) {
    TopologyReport rep;
    std::map<std::pair<int, int>, Ineqs> systems;
    for (const auto& s : tr.steps) {
        if (!replayable(s)) continue;
        Ineqs& sys = systems[{s.half, s.member}];
        if (s.stage == "ackermann") {
            TopologyVerdict v = topology_of(sys);
            v.step = s.step;
            if (!v.correct) rep.all_correct = false;
            rep.steps.push_back(v);
        }
        sys = replay_step(sys, s);
    }
    return rep;
}

}  // namespace alba
