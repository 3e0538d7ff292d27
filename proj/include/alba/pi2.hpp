#pragma once
// ALBA for Pi2 statements: eliminate the existential variables, then run the
// quasi engine on what is left.

#include <string>
#include <vector>

#include "alba/engine.hpp"

namespace alba {

struct FirstHalfResult {
    bool success = false;
    MetaConjunction output;
    DerivationTrace trace;  // steps tagged half = 1
    OrderType eps_q;        // order-type on the bound variables that succeeded
    std::vector<std::string> order;  // elimination order, last eliminated first
    // failure
    std::string stuck;  // quantifier that could not be eliminated
    std::vector<Inequality> stuck_system;
    std::string message;
};

// Tries the order-types on the bound variables (1 before d) and the linear orders
// on them; the first combination that eliminates every bound variable wins.
FirstHalfResult first_half(const ExistsStatement& e);

// Same, for one fixed order-type and order (smallest first).
FirstHalfResult first_half(const ExistsStatement& e, const OrderType& eps_q, const std::vector<std::string>& order);

AlbaOutcome run_alba_pi2(const Pi2Statement& s, const AlbaOptions& opts = {});

}  // namespace alba
