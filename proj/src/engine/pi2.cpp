#include "alba/pi2.hpp"

#include <algorithm>

#include "strategy.hpp"

namespace alba {

using namespace detail;

namespace {

// q may be replaced by F (or T) when every row is antitone (monotone) in it
std::optional<Polarity> bound_uniform(const Ineqs& is, const std::string& q) {
    bool down_ok = true, up_ok = true;
    for (const auto& i : is) {
        Occurrences l = occurrences(i.lhs, q), r = occurrences(i.rhs, q);
        if (l.neg || r.pos) down_ok = false;
        if (l.pos || r.neg) up_ok = false;
    }
    if (down_ok) return Polarity::One;
    if (up_ok) return Polarity::Partial;
    return std::nullopt;
}

}  // namespace

FirstHalfResult first_half(const ExistsStatement& e, const OrderType& eps_q, const std::vector<std::string>& order) {
    FirstHalfResult res;
    res.eps_q = eps_q;
    res.order = order;
    Pre pre{&res.trace, 1};
    Ineqs is = pre.split_all(pre.distribute_all(e.inequalities));
    std::vector<std::string> live;
    for (const auto& q : order) {
        bool occurs = std::any_of(is.begin(), is.end(), [&](const Inequality& i) { return contains_var(i, q); });
        if (!occurs) continue;
        if (auto pol = bound_uniform(is, q)) {
            Ineqs next;
            Formula value = *pol == Polarity::One ? Formula::bot() : Formula::top();
            for (const auto& i : is) next.push_back(substitute(i, value, q));
            pre.log(*pol == Polarity::One ? "eliminate-bot" : "eliminate-top", is, next);
            is = std::move(next);
            continue;
        }
        live.push_back(q);
    }
    is = pre.rewrite_prec(is);
    for (auto& s : res.trace.steps) s.half = 1;

    // only the bound variables are typed, so free variables are never critical
    OrderType eps;
    for (const auto& q : live) eps.assignment[q] = eps_q.has(q) ? eps_q.at(q) : Polarity::One;

    System sys;
    sys.inequalities = is;
    Runner run{res.trace, 0, 1, sys};
    {
        TraceStep t;
        t.stage = "approximation";
        t.rule = "initial-system";
        t.member = 0;
        t.half = 1;
        t.produced = is;
        res.trace.add(std::move(t));
    }
    run.solve(eps);
    auto pending = [&] {
        std::vector<std::string> out;
        auto vars = run.remaining();
        for (const auto& q : live)
            if (vars.count(q)) out.push_back(q);
        return out;
    };
    while (true) {
        auto rest = pending();
        if (rest.empty()) break;
        bool done = false;
        const std::string& top = rest.back();
        done = run.eliminate_var(top, preferred(eps, top));
        for (auto it = rest.rbegin(); it != rest.rend() && !done; ++it) {
            Side s = preferred(eps, *it);
            done = run.eliminate_var(*it, s) || run.eliminate_var(*it, s == Side::Right ? Side::Left : Side::Right);
        }
        if (!done) {
            res.stuck = top;
            res.stuck_system = run.sys.inequalities;
            res.message = "cannot eliminate the quantifier over " + top;
            return res;
        }
        run.solve(eps);
    }
    res.success = true;
    res.output.items = run.sys.inequalities;
    return res;
}

FirstHalfResult first_half(const ExistsStatement& e) {
    std::vector<std::string> bound = e.bound;
    std::sort(bound.begin(), bound.end());
    bound.erase(std::unique(bound.begin(), bound.end()), bound.end());
    const std::size_t n = bound.size();
    std::optional<FirstHalfResult> first_failure;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        OrderType eps;
        for (std::size_t k = 0; k < n; ++k)
            eps.assignment[bound[k]] = (mask >> (n - 1 - k)) & 1 ? Polarity::Partial : Polarity::One;
        std::vector<std::string> perm = bound;
        do {
            FirstHalfResult r = first_half(e, eps, perm);
            if (r.success) return r;
            if (!first_failure) first_failure = std::move(r);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return *first_failure;
}

AlbaOutcome run_alba_pi2(const Pi2Statement& s, const AlbaOptions& opts) {
    if (s.bound.empty()) return run_alba({s.antecedent, s.consequent}, opts);
    FirstHalfResult fh = first_half(ExistsStatement{s.bound, s.consequent});
    if (!fh.success) {
        AlbaOutcome out;
        out.trace = fh.trace;
        out.stuck_system.inequalities = fh.stuck_system;
        out.unresolved = {fh.stuck};
        out.message = "first half: " + fh.message;
        return out;
    }
    AlbaOptions second = opts;
    second.half = 2;
    AlbaOutcome out = run_alba({s.antecedent, fh.output.items}, second);
    DerivationTrace merged = fh.trace;
    for (auto step : out.trace.steps) merged.add(std::move(step));
    out.trace = std::move(merged);
    return out;
}

}  // namespace alba
