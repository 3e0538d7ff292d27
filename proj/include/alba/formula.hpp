#pragma once
// Formulas of the modal subordination language and its expanded form.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace alba {

enum class Op : std::uint8_t {
    Var,
    Nom,
    Bot,
    Top,
    Not,
    And,
    Or,
    Imp,
    Box,    // box
    Dia,    // dia
    SBox,   // sbox, reverse R
    SDia,   // sdia, reverse R
    BBox,   // bbox, reverse R'
    BDia,   // bdia, reverse R'
    SBBox,  // sbbox, forward R
    SBDia,  // sbdia, forward R
};

int arity(Op op);
bool is_leaf(Op op);
bool is_modal(Op op);
bool is_diamond(Op op);  // Dia, SDia, BDia, SBDia
bool is_box(Op op);      // Box, SBox, BBox, SBBox
bool is_black(Op op);
const char* op_keyword(Op op);  // surface keyword, "" for leaves

// Immutable, structurally shared formula value.
class Formula {
public:
    Formula();  // the constant F
    static Formula var(std::string name);
    static Formula nom(std::string name);
    static Formula bot();
    static Formula top();
    static Formula make(Op op, const Formula& a);
    static Formula make(Op op, const Formula& a, const Formula& b);

    Op op() const;
    const std::string& name() const;
    const Formula& child(int i) const;
    const Formula& lhs() const { return child(0); }
    const Formula& rhs() const { return child(1); }
    std::size_t hash() const;
    int size() const;
    int modal_depth() const;
    bool same_node(const Formula& o) const { return node_ == o.node_; }

    // total order, structural
    int compare(const Formula& o) const;
    friend bool operator==(const Formula& a, const Formula& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
    friend bool operator<(const Formula& a, const Formula& b) { return a.compare(b) < 0; }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// constructors in plain notation; these do not simplify
Formula neg(const Formula& a);
Formula conj(const Formula& a, const Formula& b);
Formula disj(const Formula& a, const Formula& b);
Formula imp(const Formula& a, const Formula& b);
Formula box(const Formula& a);
Formula dia(const Formula& a);
Formula sbox(const Formula& a);
Formula sdia(const Formula& a);
Formula bbox(const Formula& a);
Formula bdia(const Formula& a);
Formula sbbox(const Formula& a);
Formula sbdia(const Formula& a);

// Negation that cancels a leading negation instead of stacking a second one.
Formula neg_smart(const Formula& a);

enum class Sign : std::uint8_t { Plus, Minus };
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
Sign child_sign(Op op, Sign parent, int child);

struct Occurrences {
    bool pos = false;
    bool neg = false;
};

std::set<std::string> prop_vars(const Formula& f);
std::set<std::string> nominals(const Formula& f);
bool contains_var(const Formula& f, const std::string& p);
bool contains_nominal(const Formula& f, const std::string& n);
bool is_pure(const Formula& f);
// sign of each occurrence of p when f is read with the given root sign
Occurrences occurrences(const Formula& f, const std::string& p, Sign root = Sign::Plus);

Formula substitute(const Formula& theta, const Formula& eta, const std::string& p);
Formula substitute_nominal(const Formula& theta, const Formula& eta, const std::string& n);

struct VocabularyReport {
    std::set<std::string> prop_vars;
    std::set<std::string> nominals;
    bool has_black = false;
    bool has_dotted = false;
    bool is_pure = true;
};

VocabularyReport analyze_vocabulary(const Formula& f);
void merge_into(VocabularyReport& into, const VocabularyReport& from);

}  // namespace alba
