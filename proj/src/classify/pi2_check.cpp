#include "alba/classify.hpp"
#include "alba/pi2.hpp"

namespace alba {

ClassificationReport check_inductive_pi2(const Pi2Statement& s) {
    ClassificationReport r;
    QuasiInequality q{s.antecedent, s.consequent};
    if (!s.bound.empty()) {
        FirstHalfResult fh = first_half(ExistsStatement{s.bound, s.consequent});
        if (!fh.success) {
            r.diagnostic = "first half: " + fh.message;
            return r;
        }
        q.consequent = fh.output.items;
    }
    std::optional<Certificate> c;
    try {
        c = find_certificate(q);
    } catch (const std::invalid_argument& e) {
        r.diagnostic = e.what();
        return r;
    }
    if (!c) {
        r.diagnostic = "no certificate for the quasi-inequality left by the first half";
        return r;
    }
    return check_inductive_quasi(q, *c);
}

}  // namespace alba
