#pragma once
// Rewrite rules on single inequalities and on systems. Shared by the quasi
// engine and the first half of the Pi2 engine.

#include <optional>
#include <string>
#include <vector>

#include "alba/statement.hpp"

namespace alba {

enum class Rule : std::uint8_t {
    // residuation
    DiaRes,      // dia a <= b      ~> a <= bbox b
    BoxRes,      // a <= box b      ~> bdia a <= b
    SDiaRes,     // sdia a <= b     ~> a <= sbbox b
    SBoxRes,     // a <= sbox b     ~> sbdia a <= b
    BDiaRes,     // bdia a <= b     ~> a <= box b
    BBoxRes,     // a <= bbox b     ~> dia a <= b
    SBDiaRes,    // sbdia a <= b    ~> a <= sbox b
    SBBoxRes,    // a <= sbbox b    ~> sdia a <= b
    NegResLeft,  // ~a <= b         ~> ~b <= a
    NegResRight, // a <= ~b         ~> b <= ~a
    AndRes1,     // a /\ b <= c     ~> a <= b -> c
    AndRes2,     // a /\ b <= c     ~> b <= a -> c
    OrRes1,      // a <= b \/ c     ~> a /\ ~b <= c
    OrRes2,      // a <= b \/ c     ~> a /\ ~c <= b
    ImpRes1,     // a <= b -> c     ~> a /\ b <= c
    ImpRes2,     // a <= b -> c     ~> b <= a -> c
    // splitting
    SplitMeet,   // a <= b /\ c     ~> a <= b, a <= c
    SplitJoin,   // a \/ b <= c     ~> a <= c, b <= c
    // approximation, fresh nominals j, k
    ApproxDia,   // @i <= D a       ~> @j <= a, @i <= D @j     (D any diamond)
    ApproxBox,   // B a <= ~@i      ~> a <= ~@j, B ~@j <= ~@i  (B any box)
    ApproxImp,   // a -> b <= ~@i   ~> @j <= a, b <= ~@k, @j -> ~@k <= ~@i
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);
int fresh_count(Rule r);  // nominals a rule introduces

// Negation that cancels a leading negation.
Formula negate(const Formula& f);

// Applies r to one inequality. Fresh nominals are taken from `fresh` in order.
// Returns nothing when the premise pattern does not match.
std::optional<std::vector<Inequality>> apply_local(Rule r, const Inequality& i,
                                                   const std::vector<std::string>& fresh = {});

enum class Side : std::uint8_t { Right, Left };
const char* to_string(Side s);

// Ackermann elimination on a whole set of inequalities.
struct AckermannCheck {
    bool ok = false;
    std::vector<std::size_t> bounds;    // theta <= p (Right) or p <= theta (Left)
    std::vector<std::size_t> affected;  // other inequalities mentioning p
    std::string why;
};

AckermannCheck ackermann_precondition(const std::vector<Inequality>& s, const std::string& p, Side side);

// Throws std::invalid_argument when the polarity precondition fails.
std::vector<Inequality> ackermann(const std::vector<Inequality>& s, const std::string& p, Side side);

// Distribution of Skeleton +\/ and -/\ towards the root of +f (sign Plus) or -f.
Formula distribute(const Formula& f, Sign sign);

// Replaces the entries at `consumed` (ascending) with `produced`, inserted where
// the first consumed entry was; appends when nothing is consumed.
std::vector<Inequality> splice(const std::vector<Inequality>& s, const std::vector<std::size_t>& consumed,
                               const std::vector<Inequality>& produced);

}  // namespace alba
