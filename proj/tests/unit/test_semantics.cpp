#include <doctest.h>

#include <cstring>

#include "alba/engine.hpp"
#include "alba/semantics.hpp"
#include "alba/syntax.hpp"
#include "gen.hpp"
#include "naive.hpp"

using namespace alba;

namespace {

FiniteFrame chain2() {
    FiniteFrame F(2);
    F.add_r(0, 1);
    F.add_rp(1, 0);
    return F;
}

}  // namespace

TEST_CASE("extensions") {
    FiniteFrame F = chain2();
    Valuation V;
    V.props["p"] = 0b10;
    V.nominals["j"] = 0;
    CHECK(extension(F, V, parse_formula("dia p")) == 0b00);
    CHECK(extension(F, V, parse_formula("sdia p")) == 0b00);
    CHECK(extension(F, V, parse_formula("sdia @j")) == 0b10);
    CHECK(extension(F, V, parse_formula("dia @j")) == 0b10);
    CHECK(extension(F, V, parse_formula("box p")) == 0b01);
    CHECK(extension(F, V, parse_formula("p -> @j")) == 0b01);
    CHECK_THROWS_AS(extension(F, V, parse_formula("q")), UnboundSymbol);
    CHECK(holds(F, V, parse_inequality("@j prec p")));
    CHECK_FALSE(holds(F, V, parse_inequality("@j prec @j")));
}

TEST_CASE("frames and json") {
    gen::Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        FiniteFrame F = gen::frame(rng, 3);
        CHECK(frame_from_json(frame_to_json(F)) == F);
    }
    FiniteFrame F = chain2();
    AdmissibleFamily fam = AdmissibleFamily::powerset(F);
    CHECK(fam.sets.size() == 4);
    CHECK_FALSE(family_violation(F, fam));
    AdmissibleFamily bad{{0b00, 0b01}};
    CHECK(family_violation(F, bad));
    CHECK_THROWS_AS(dual_algebra(F, bad), std::invalid_argument);
}

TEST_CASE("dual algebra on the reflexive point") {
    FiniteFrame F(1);
    F.add_r(0, 0);
    F.add_rp(0, 0);
    DualAlgebraReport r = dual_algebra(F, AdmissibleFamily::powerset(F));
    CHECK(r.subordination_axioms);
    CHECK(r.contact);
    CHECK(r.symmetric);
    CHECK(r.interpolation);
    CHECK(r.proximity_preserving);
    FiniteFrame G(2);
    G.add_r(0, 1);
    CHECK_FALSE(dual_algebra(G, AdmissibleFamily::powerset(G)).contact);
}

TEST_CASE("budgets") {
    FiniteFrame F(5);
    ValidityOptions o;
    o.max_size = 4;
    CHECK_THROWS_AS(valid(F, parse_statement("p <= p")), BudgetExceeded);
    CHECK_THROWS_AS(valid(FiniteFrame(2), parse_statement("p /\\ q /\\ r /\\ s <= p"),
                          ValidityOptions{Mode::Arbitrary, nullptr, 4, 3}),
                    BudgetExceeded);
    ValidityOptions adm;
    adm.mode = Mode::Admissible;
    CHECK_THROWS(valid(FiniteFrame(2), parse_statement("p <= p"), adm));
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
    const simd::Kernels& s = simd::scalar_kernels();
    std::mt19937_64 rng(11);
    for (const simd::Kernels* k : simd::available_kernels()) {
        for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 64u}) {
            std::vector<simd::Word> a(n), b(n), x(n), y(n);
            for (auto& w : a) w = rng();
            for (auto& w : b) w = rng();
            s.and_(x.data(), a.data(), b.data(), n);
            k->and_(y.data(), a.data(), b.data(), n);
            CHECK(x == y);
            s.or_(x.data(), a.data(), b.data(), n);
            k->or_(y.data(), a.data(), b.data(), n);
            CHECK(x == y);
            s.andnot(x.data(), a.data(), b.data(), n);
            k->andnot(y.data(), a.data(), b.data(), n);
            CHECK(x == y);
            s.not_(x.data(), a.data(), n);
            k->not_(y.data(), a.data(), n);
            CHECK(x == y);
            s.fill(x.data(), 0x5a5a, n);
            k->fill(y.data(), 0x5a5a, n);
            CHECK(x == y);
            CHECK(s.all_ones(a.data(), n) == k->all_ones(a.data(), n));
            std::vector<simd::Word> ones(n, ~simd::Word{0});
            CHECK(k->all_ones(ones.data(), n));
            if (n > 0) {
                ones[n - 1] ^= simd::Word{1} << 63;
                CHECK_FALSE(k->all_ones(ones.data(), n));
            }
        }
    }
    CHECK(std::strcmp(simd::kernels_by_name("scalar")->name, "scalar") == 0);
}

TEST_CASE("property: bit-sliced, reference and naive validity agree") {
    gen::Rng rng(17);
    gen::FormulaShape shape;
    shape.depth = 2;
    shape.noms = {"j"};
    shape.expanded = true;
    for (int k = 0; k < 80; ++k) {
        Statement st;
        if (k % 3 == 0) {
            st = QuasiInequality{{prec(gen::formula(rng, shape), gen::formula(rng, shape))},
                                 {leq(gen::formula(rng, shape), gen::formula(rng, shape))}};
        } else {
            st = leq(gen::formula(rng, shape), gen::formula(rng, shape));
        }
        BitslicedStatement b(st);
        for (int n = 1; n <= 3; ++n) {
            FiniteFrame F = gen::frame(rng, n);
            bool ref = valid_reference(F, st);
            CHECK(ref == naive::valid(naive::from(F), st));
            for (const simd::Kernels* kern : simd::available_kernels()) CHECK(b.valid_on(F, *kern) == ref);
        }
    }
}

TEST_CASE("property: bit-sliced Pi2 statements") {
    for (const auto& e : gen::first_round_good(21, 15)) {
        Pi2Statement s{{parse_inequality("T <= T")}, e.bound, e.inequalities};
        BitslicedStatement b(s);
        for (int n = 1; n <= 2; ++n)
            for_each_frame(n, [&](const FiniteFrame& F) {
                CHECK(b.valid_on(F) == valid_reference(F, s));
                return true;
            });
    }
}

TEST_CASE("property: compiled and recursive first-order evaluation agree") {
    gen::Rng rng(19);
    gen::FormulaShape shape;
    shape.noms = {"j"};
    for (int k = 0; k < 60; ++k) {
        FOFormula f = standard_translation(gen::formula(rng, shape), "x");
        CompiledFO c(f);
        FiniteFrame F = gen::frame(rng, 3);
        for (int x = 0; x < 3; ++x)
            for (int j = 0; j < 3; ++j)
                for (WorldSet p = 0; p < 8; p += 3) {
                    std::map<std::string, int> env{{"x", x}, {"j", j}};
                    Valuation V;
                    V.props = {{"p", p}, {"q", p ^ 5}};
                    std::vector<int> slots;
                    for (const auto& v : c.free_variables()) slots.push_back(env.at(v));
                    std::vector<WorldSet> preds;
                    for (const auto& q : c.predicate_names()) preds.push_back(V.props.at(q));
                    CHECK(c.eval(F, slots, preds) == eval_fo(F, f, env, &V));
                }
    }
}

TEST_CASE("oracle finds counterexamples") {
    auto q = parse_quasi("p prec q => p <= q");
    OracleVerdict ok = equivalence_oracle(q, parse_fo("forall w. R(w,w)"));
    CHECK(ok.equivalent);
    CHECK(ok.frames_checked > 0);
    OracleVerdict bad = equivalence_oracle(q, parse_fo("forall w. R'(w,w)"));
    REQUIRE_FALSE(bad.equivalent);
    REQUIRE(bad.counterexample);
    CHECK(bad.statement_valid != bad.fo_true);
    OracleBudget sampled{2, 4, 50, 9};
    long small = equivalence_oracle(q, parse_fo("forall w. R(w,w)"), OracleBudget{2}).frames_checked;
    CHECK(equivalence_oracle(q, parse_fo("forall w. R(w,w)"), sampled).frames_checked == small + 50);
}

TEST_CASE("property: ALBA outputs are equivalent to their inputs") {
    for (const auto& q : gen::inductive_quasis(41, 15)) {
        AlbaOutcome o = run_alba(q);
        REQUIRE(o.success);
        CHECK(equivalence_oracle(q, correspondent(o.pure_quasis), OracleBudget{2}).equivalent);
    }
}
