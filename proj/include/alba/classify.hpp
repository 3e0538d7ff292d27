#pragma once
// Inductive quasi-inequalities, certificates and syntactic polarity.

#include <optional>
#include <string>
#include <vector>

#include "alba/statement.hpp"
#include "alba/trees.hpp"

namespace alba {

struct Certificate {
    OrderType eps;
    std::vector<std::string> order;  // Omega as a linear order, smallest first

    DependenceOrder omega() const { return DependenceOrder::linear(order); }
};

enum class Tag : std::uint8_t { Receiving, Solvable, Neither, ConsequentInductive, ConsequentNotInductive };
const char* to_string(Tag t);

struct TaggedInequality {
    Inequality ineq;
    Tag tag;
};

struct ClassificationReport {
    bool accepted = false;
    std::optional<Certificate> certificate;
    std::vector<TaggedInequality> tags;
    std::string diagnostic;  // first violated clause, empty when accepted
};

// Returns a description of the first violated clause, or nothing when the
// signed tree is (Omega, eps)-inductive. With require_pia every critical branch
// must also be a PIA branch, as asked of the unsolved side of a solvable inequality.
std::optional<std::string> inductive_tree_violation(Sign sign, const Formula& f, const OrderType& eps,
                                                    const DependenceOrder& omega, bool require_pia = false);
bool check_inductive_tree(const SignedTree& t, const Certificate& cert);
bool check_inductive_tree(const SignedTree& t, const OrderType& eps, const DependenceOrder& omega);

Tag tag_inequality(const Inequality& i, const OrderType& eps, const DependenceOrder& omega,
                   std::string* why = nullptr);
Tag tag_inequality(const Inequality& i, const Certificate& cert);

ClassificationReport check_inductive_quasi(const QuasiInequality& q, const OrderType& eps,
                                           const DependenceOrder& omega);
ClassificationReport check_inductive_quasi(const QuasiInequality& q, const Certificate& cert);

// Variables removed by the monotone/antitone rules of preprocessing, mapped to
// the order-type under which all of their occurrences are non-critical.
std::map<std::string, Polarity> uniform_variables(const QuasiInequality& q);

constexpr int kDefaultCertificateVarBound = 6;

// Lexicographic search: eps over sorted names with 1 before d, then Omega over
// linear orders by next_permutation. Uniform variables are fixed and sit at the bottom.
std::optional<Certificate> find_certificate(const QuasiInequality& q, int max_vars = kDefaultCertificateVarBound);

struct SyntacticPolarity {
    bool closed = false;
    bool open = false;
};

SyntacticPolarity syntactic_polarity(const Formula& f, Sign sign);

ClassificationReport check_restricted_inductive_quasi(const QuasiInequality& q);

ClassificationReport check_restricted_first_round_good(const ExistsStatement& e, const OrderType& eps_q,
                                                       const DependenceOrder& omega);

ClassificationReport check_inductive_pi2(const Pi2Statement& s);

}  // namespace alba
