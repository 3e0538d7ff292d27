#pragma once
// The ALBA engine for quasi-inequalities.

#include <optional>
#include <string>
#include <vector>

#include "alba/classify.hpp"
#include "alba/rules.hpp"
#include "alba/statement.hpp"

namespace alba {

struct TraceStep {
    int step = 0;
    std::string stage;  // preprocess, approximation, reduction, ackermann, output
    std::string rule;
    int member = -1;  // index into the Preprocess set, -1 before the split
    int half = 0;     // 1 or 2 for Pi2 runs, 0 otherwise
    std::vector<std::size_t> premises;
    std::vector<Inequality> consumed;
    std::vector<Inequality> produced;
    std::vector<std::string> fresh;
};

struct DerivationTrace {
    std::vector<TraceStep> steps;

    void add(TraceStep s);
    std::string to_jsonl() const;
};

struct System {
    std::vector<Inequality> inequalities;
    Inequality goal;
    int fresh_counter = 0;

    std::string fresh_nominal();  // "_k" with k strictly increasing
};

struct RuleInstance {
    Rule rule;
    std::size_t index;  // addressed inequality
};

struct AlbaOptions {
    std::optional<Certificate> certificate;  // searched for when absent
    bool simplify_output = true;
    int half = 0;  // copied into trace steps
};

struct AlbaOutcome {
    bool success = false;
    std::vector<QuasiInequality> pure_quasis;  // simplified and canonically named
    std::vector<QuasiInequality> raw_quasis;   // as reduced, before output simplification
    DerivationTrace trace;
    std::optional<Certificate> certificate;  // the one that guided the run
    bool certified = false;                  // certificate came from the classifier
    // failure
    System stuck_system;
    std::vector<std::string> unresolved;
    std::string message;
};

// Stage 1. Distribution, splitting, monotone/antitone elimination, rewriting of
// prec, and the split into one quasi-inequality per consequent.
std::vector<QuasiInequality> preprocess(const QuasiInequality& q, DerivationTrace* trace = nullptr);

System first_approximation(const QuasiInequality& q, int first_fresh = 0);

System apply_rule(const System& s, const RuleInstance& r);
System eliminate(const System& s, const std::string& p, Side side);

AlbaOutcome run_alba(const QuasiInequality& q, const AlbaOptions& opts = {});

// Applies the output simplifications and canonical nominal names.
QuasiInequality simplify_pure(const QuasiInequality& q, DerivationTrace* trace = nullptr);
QuasiInequality canonical_nominals(const QuasiInequality& q);

struct TopologyVerdict {
    int step = 0;
    bool correct = true;
    std::string offending;  // first inequality with a non-closed left or non-open right side
};

struct TopologyReport {
    bool all_correct = true;
    std::vector<TopologyVerdict> steps;
};

// Needs the systems seen before each Ackermann step, so it replays the trace.
TopologyReport check_topological_correctness(const DerivationTrace& tr);
// Same check on a single system.
TopologyVerdict topology_of(const std::vector<Inequality>& s);

// Replays the Stage 2 steps of one Preprocess member from an empty system and
// returns the final inequalities. Throws when a step does not match.
std::vector<Inequality> replay(const DerivationTrace& tr, int member, int half = 0);

}  // namespace alba
