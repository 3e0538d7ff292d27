#pragma once
// Model checking, validity, first-order evaluation and the equivalence oracle.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alba/fol.hpp"
#include "alba/frame.hpp"
#include "alba/simd/kernels.hpp"
#include "alba/statement.hpp"

namespace alba {

struct Valuation {
    std::map<std::string, WorldSet> props;
    std::map<std::string, int> nominals;  // each nominal denotes one world
};

class UnboundSymbol : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

WorldSet extension(const FiniteFrame& F, const Valuation& V, const Formula& f);
bool eval_formula(const FiniteFrame& F, const Valuation& V, int w, const Formula& f);
bool holds(const FiniteFrame& F, const Valuation& V, const Inequality& i);

// Pi2 witnesses range over all subsets, or over `family` when one is given.
bool holds_statement(const FiniteFrame& F, const Valuation& V, const Statement& s,
                     const AdmissibleFamily* family = nullptr);

enum class Mode : std::uint8_t { Arbitrary, Admissible };

struct ValidityOptions {
    Mode mode = Mode::Arbitrary;
    const AdmissibleFamily* family = nullptr;  // required in Admissible mode
    int max_size = 4;
    int max_vars = 3;
};

// Every valuation of the mode and every nominal assignment. Arbitrary mode runs
// the bit-sliced evaluator; Admissible mode enumerates valuations one by one.
bool valid(const FiniteFrame& F, const Statement& s, const ValidityOptions& opts = {});
// one valuation at a time, the reference the bit-sliced path is tested against
bool valid_reference(const FiniteFrame& F, const Statement& s, const ValidityOptions& opts = {});

// A statement prepared once and checked on many frames, all valuations at once.
class BitslicedStatement {
public:
    explicit BitslicedStatement(const Statement& s, int max_bits = 24);
    ~BitslicedStatement();
    BitslicedStatement(BitslicedStatement&&) noexcept;
    BitslicedStatement& operator=(BitslicedStatement&&) noexcept;

    bool valid_on(const FiniteFrame& F, const simd::Kernels& k = simd::active_kernels()) const;
    int var_count() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// First-order evaluation. Predicates P_p read V.props; free variables read env.
bool eval_fo(const FiniteFrame& F, const FOFormula& f, const std::map<std::string, int>& env,
             const Valuation* V = nullptr);

// A formula compiled to variable slots for repeated evaluation.
class CompiledFO {
public:
    explicit CompiledFO(const FOFormula& f);
    ~CompiledFO();
    CompiledFO(CompiledFO&&) noexcept;
    CompiledFO& operator=(CompiledFO&&) noexcept;

    const std::vector<std::string>& free_variables() const;
    const std::vector<std::string>& predicate_names() const;
    // env follows free_variables(), preds follows predicate_names()
    bool eval(const FiniteFrame& F, const std::vector<int>& env, const std::vector<WorldSet>& preds) const;
    // closed formula, true for every interpretation of the predicates
    bool valid_on(const FiniteFrame& F) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct OracleBudget {
    int max_size = 3;       // every frame up to this size
    int sampled_size = 0;   // 0, or one larger size checked on random frames
    int samples = 0;
    unsigned seed = 0;
};

struct OracleVerdict {
    bool equivalent = true;
    std::optional<FiniteFrame> counterexample;
    bool statement_valid = false;  // on the counterexample
    bool fo_true = false;
    long frames_checked = 0;
};

OracleVerdict equivalence_oracle(const Statement& s, const FOFormula& fo, const OracleBudget& b = {},
                                 const simd::Kernels& k = simd::active_kernels());

struct DualAlgebraReport {
    std::vector<WorldSet> carrier;
    std::vector<std::pair<WorldSet, WorldSet>> prec;  // U prec V iff R[U] is inside V
    std::map<WorldSet, WorldSet> dia;                 // U to R'^-1[U]
    bool subordination_axioms = false;
    bool normality = false;
    bool additivity = false;
    bool contact = false;          // a prec b implies a <= b
    bool symmetric = false;        // a prec b implies ~b prec ~a
    bool interpolation = false;    // a prec b implies a prec c prec b for some c
    bool proximity_preserving = false;  // a prec b implies dia a prec dia b
};

// Throws std::invalid_argument when the family breaks its invariants.
DualAlgebraReport dual_algebra(const FiniteFrame& F, const AdmissibleFamily& family);

}  // namespace alba
