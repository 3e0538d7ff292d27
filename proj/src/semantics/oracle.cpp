#include <random>

#include "alba/semantics.hpp"

namespace alba {

OracleVerdict equivalence_oracle(const Statement& s, const FOFormula& fo, const OracleBudget& b,
                                 const simd::Kernels& k) {
    BitslicedStatement bs(s);
    CompiledFO cf(fo);
    OracleVerdict out;
    auto check = [&](const FiniteFrame& F) {
        ++out.frames_checked;
        bool sv = bs.valid_on(F, k);
        bool fv = cf.valid_on(F);
        if (sv == fv) return true;
        out.equivalent = false;
        out.counterexample = F;
        out.statement_valid = sv;
        out.fo_true = fv;
        return false;
    };
    for (int n = 1; n <= b.max_size; ++n)
        if (!for_each_frame(n, check)) return out;
    if (b.sampled_size > 0) {
        const int n = b.sampled_size;
        std::mt19937_64 rng(b.seed);
        const int edges = n * n;
        const std::uint64_t mask = edges >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges) - 1;
        for (int i = 0; i < b.samples; ++i) {
            std::uint64_t r = rng() & mask;
            std::uint64_t rp = rng() & mask;
            if (!check(FiniteFrame::from_masks(n, r, rp))) return out;
        }
    }
    return out;
}

DualAlgebraReport dual_algebra(const FiniteFrame& F, const AdmissibleFamily& family) {
    if (auto why = family_violation(F, family)) throw std::invalid_argument(*why);
    DualAlgebraReport out;
    const auto& C = family.sets;
    const WorldSet all = F.all();
    out.carrier = C;
    auto prec = [&](WorldSet a, WorldSet b) { return (F.r_image(a) & ~b) == 0; };
    for (WorldSet a : C) {
        out.dia[a] = F.rp_preimage(a);
        for (WorldSet b : C)
            if (prec(a, b)) out.prec.emplace_back(a, b);
    }
    auto every_pair = [&](auto&& p) {
        for (WorldSet a : C)
            for (WorldSet b : C)
                if (!p(a, b)) return false;
        return true;
    };
    out.subordination_axioms = prec(0, 0) && prec(all, all) && every_pair([&](WorldSet a, WorldSet b) {
        for (WorldSet c : C) {
            if (prec(a, b) && prec(a, c) && !prec(a, b & c)) return false;
            if (prec(a, c) && prec(b, c) && !prec(a | b, c)) return false;
        }
        // a <= b prec c <= d gives a prec d
        if (!prec(a, b)) return true;
        for (WorldSet x : C)
            for (WorldSet d : C)
                if ((x & ~a) == 0 && (b & ~d) == 0 && !prec(x, d)) return false;
        return true;
    });
    out.normality = F.rp_preimage(0) == 0;
    out.additivity = every_pair(
        [&](WorldSet a, WorldSet b) { return F.rp_preimage(a | b) == (F.rp_preimage(a) | F.rp_preimage(b)); });
    out.contact = every_pair([&](WorldSet a, WorldSet b) { return !prec(a, b) || (a & ~b) == 0; });
    out.symmetric = every_pair([&](WorldSet a, WorldSet b) { return !prec(a, b) || prec(all & ~b, all & ~a); });
    out.interpolation = every_pair([&](WorldSet a, WorldSet b) {
        if (!prec(a, b)) return true;
        for (WorldSet c : C)
            if (prec(a, c) && prec(c, b)) return true;
        return false;
    });
    out.proximity_preserving = every_pair(
        [&](WorldSet a, WorldSet b) { return !prec(a, b) || prec(F.rp_preimage(a), F.rp_preimage(b)); });
    return out;
}

}  // namespace alba
