#pragma once
// Signed generation trees, node classes, critical branches.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alba/formula.hpp"

namespace alba {

enum class Polarity : std::uint8_t { One, Partial };  // epsilon(p) = 1 or d

// Variables outside the assignment are never critical and are ignored by the
// uniformity tests; the Pi2 checks rely on this to type only the bound variables.
struct OrderType {
    std::map<std::string, Polarity> assignment;

    Polarity at(const std::string& p) const;  // throws std::out_of_range for unknown p
    bool has(const std::string& p) const { return assignment.count(p) > 0; }
    bool covers(const std::set<std::string>& vars) const;
    // a leaf with this sign and variable is epsilon-critical
    bool critical(Sign leaf_sign, const std::string& p) const;
    OrderType dual() const;
};

// Strict dependence order; (a, b) in edges means a <_Omega b.
struct DependenceOrder {
    std::set<std::pair<std::string, std::string>> edges;

    static DependenceOrder linear(const std::vector<std::string>& bottom_to_top);
    bool less(const std::string& a, const std::string& b) const;
    bool is_strict_order() const;  // irreflexive and transitive
};

enum class NodeClass : std::uint8_t { DeltaAdjoint, SLR, SRA, SRR, Leaf };

const char* to_string(NodeClass c);
const char* to_string(Polarity p);

// Table 1 lists several (sign, connective) pairs in two cells. The primary class
// prefers the Skeleton cell; the predicates below answer full membership.
NodeClass classify_node(Sign sign, Op op);
bool is_delta_adjoint(Sign sign, Op op);
bool is_slr(Sign sign, Op op);
bool is_sra(Sign sign, Op op);
bool is_srr(Sign sign, Op op);
inline bool is_skeleton_node(Sign s, Op op) { return is_delta_adjoint(s, op) || is_slr(s, op); }
inline bool is_pia_node(Sign s, Op op) { return is_sra(s, op) || is_srr(s, op); }

struct SignedTree {
    Sign sign = Sign::Plus;
    Formula formula;
    NodeClass node_class = NodeClass::Leaf;
    std::vector<SignedTree> children;
};

SignedTree build_signed_tree(Sign sign, const Formula& f);
std::string dump(const SignedTree& t);  // indented, one node per line

struct BranchStep {
    Op op;
    Sign sign;
    int via = 0;              // child index the branch passes through
    Formula sibling;          // other child of a binary node
    Sign sibling_sign = Sign::Plus;
};

struct Branch {
    std::string leaf;
    Sign leaf_sign = Sign::Plus;
    std::vector<BranchStep> steps;  // steps[0] is the parent of the leaf
};

// Branches ending in propositional variables, left to right.
std::vector<Branch> branches(const SignedTree& t);
std::vector<Branch> branches(Sign sign, const Formula& f);
std::vector<Branch> critical_branches(const SignedTree& t, const OrderType& eps);
std::vector<Branch> critical_branches(Sign sign, const Formula& f, const OrderType& eps);

struct BranchKind {
    bool good = false;
    int pia_len = 0;   // P1, counted from the leaf
    int skel_len = 0;  // P2
    bool is_pia = false;
    bool is_skeleton = false;
};

BranchKind branch_kind(const Branch& b);

bool is_eps_uniform(const SignedTree& t, const OrderType& eps, bool dual);
bool is_eps_uniform(Sign sign, const Formula& f, const OrderType& eps, bool dual);

}  // namespace alba
