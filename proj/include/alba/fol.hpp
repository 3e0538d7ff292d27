#pragma once
// First-order correspondence language over R, R' and unary predicates P_p.

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "alba/statement.hpp"

namespace alba {

enum class FOKind : std::uint8_t { True, False, Rel, RelP, Pred, Eq, Not, And, Or, Imp, Forall, Exists };

// Terms are variable names. Nominal constants are terms named after the nominal.
class FOFormula {
public:
    FOFormula();  // true
    static FOFormula truth();
    static FOFormula falsity();
    static FOFormula rel(std::string a, std::string b);   // R(a,b)
    static FOFormula relp(std::string a, std::string b);  // R'(a,b)
    static FOFormula pred(std::string p, std::string a);  // P_p(a)
    static FOFormula eq(std::string a, std::string b);
    static FOFormula negation(const FOFormula& a);
    static FOFormula conjunction(const FOFormula& a, const FOFormula& b);
    static FOFormula disjunction(const FOFormula& a, const FOFormula& b);
    static FOFormula implication(const FOFormula& a, const FOFormula& b);
    static FOFormula forall(std::string x, const FOFormula& body);
    static FOFormula exists(std::string x, const FOFormula& body);

    FOKind kind() const;
    const std::string& name() const;  // predicate variable or bound variable
    const std::string& a() const;     // first term
    const std::string& b() const;     // second term
    const FOFormula& child(int i) const;
    int arity() const;

    friend bool operator==(const FOFormula& x, const FOFormula& y);
    friend bool operator!=(const FOFormula& x, const FOFormula& y) { return !(x == y); }

private:
    struct Node;
    explicit FOFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const FOFormula& f);
std::set<std::string> predicates(const FOFormula& f);
int quantifier_depth(const FOFormula& f);

// ST_x(f) with fresh bound variables x0, x1, ... taken from `counter`.
FOFormula standard_translation(const Formula& f, const std::string& x, int& counter);
FOFormula standard_translation(const Formula& f, const std::string& x);

// Nominals stay free unless close_nominals, which binds each with a universal
// quantifier in order of first occurrence.
FOFormula standard_translation(const Inequality& i, bool close_nominals = true);
FOFormula standard_translation(const MetaConjunction& m, bool close_nominals = true);
FOFormula standard_translation(const QuasiInequality& q, bool close_nominals = true);
// conjunction of the closed translations
FOFormula standard_translation(const std::vector<QuasiInequality>& pure);

// Equality resolution, constant folding, quantifier pruning and canonical bound
// variable names w, v, u, t, s, r, w1, ...
FOFormula simplify_fo(const FOFormula& f);
FOFormula canonical_bound_names(const FOFormula& f);

// simplified correspondent of a set of pure quasi-inequalities
FOFormula correspondent(const std::vector<QuasiInequality>& pure);

std::string render(const FOFormula& f);
std::string to_sexpr(const FOFormula& f);
FOFormula parse_fo(std::string_view text);  // throws ParseError

}  // namespace alba
