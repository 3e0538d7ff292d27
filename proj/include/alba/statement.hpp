#pragma once
// Inequalities, quasi-inequalities and Pi2 statements.

#include <string>
#include <variant>
#include <vector>

#include "alba/formula.hpp"

namespace alba {

enum class Rel : std::uint8_t { Leq, Prec };

struct Inequality {
    Formula lhs;
    Rel rel = Rel::Leq;
    Formula rhs;

    friend bool operator==(const Inequality& a, const Inequality& b) {
        return a.rel == b.rel && a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend bool operator!=(const Inequality& a, const Inequality& b) { return !(a == b); }
};

inline Inequality leq(Formula a, Formula b) { return {std::move(a), Rel::Leq, std::move(b)}; }
inline Inequality prec(Formula a, Formula b) { return {std::move(a), Rel::Prec, std::move(b)}; }

struct MetaConjunction {
    std::vector<Inequality> items;
    friend bool operator==(const MetaConjunction&, const MetaConjunction&) = default;
};

struct QuasiInequality {
    std::vector<Inequality> antecedent;
    std::vector<Inequality> consequent;
    friend bool operator==(const QuasiInequality&, const QuasiInequality&) = default;
};

struct Pi2Statement {
    std::vector<Inequality> antecedent;
    std::vector<std::string> bound;
    std::vector<Inequality> consequent;
    friend bool operator==(const Pi2Statement&, const Pi2Statement&) = default;
};

// The consequent of a Pi2 statement on its own.
struct ExistsStatement {
    std::vector<std::string> bound;
    std::vector<Inequality> inequalities;
    friend bool operator==(const ExistsStatement&, const ExistsStatement&) = default;
};

using Statement = std::variant<Inequality, MetaConjunction, QuasiInequality, Pi2Statement>;

// An empty antecedent is written as the single inequality T <= T.
QuasiInequality normalize(QuasiInequality q);
bool is_trivial(const Inequality& i);  // T <= T

bool is_pure(const Inequality& i);
bool contains_var(const Inequality& i, const std::string& p);
bool contains_nominal(const Inequality& i, const std::string& n);
Inequality substitute(const Inequality& i, const Formula& eta, const std::string& p);
Inequality substitute_nominal(const Inequality& i, const Formula& eta, const std::string& n);

VocabularyReport analyze_vocabulary(const Inequality& i);
VocabularyReport analyze_vocabulary(const std::vector<Inequality>& is);
VocabularyReport analyze_vocabulary(const Statement& s);

}  // namespace alba
