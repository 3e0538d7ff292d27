#include <doctest.h>

#include <set>

#include "alba/syntax.hpp"
#include "alba/trees.hpp"
#include "gen.hpp"

using namespace alba;

namespace {

// Skeleton and PIA cells, transcribed as (sign, connective) lists
using Cell = std::set<std::pair<Sign, Op>>;
const Sign P = Sign::Plus, M = Sign::Minus;
const Cell kDelta{{P, Op::Or}, {M, Op::And}};
const Cell kSra{{P, Op::And}, {P, Op::Not}, {P, Op::Box}, {P, Op::BBox}, {P, Op::SBox}, {P, Op::SBBox},
                {M, Op::Or}, {M, Op::Not}, {M, Op::Dia}, {M, Op::BDia}, {M, Op::SDia}, {M, Op::SBDia}};
const Cell kSlr{{P, Op::And},  {P, Op::Not},  {P, Op::Dia},  {P, Op::BDia},  {P, Op::SDia},  {P, Op::SBDia}, {M, Op::Or},
                {M, Op::Not},  {M, Op::Box},  {M, Op::BBox}, {M, Op::SBox}, {M, Op::SBBox}, {M, Op::Imp}};
const Cell kSrr{{P, Op::Or}, {P, Op::Imp}, {M, Op::And}};

const Op kConnectives[] = {Op::Not,  Op::And,  Op::Or,   Op::Imp,  Op::Box,   Op::Dia,
                           Op::SBox, Op::SDia, Op::BBox, Op::BDia, Op::SBBox, Op::SBDia};

OrderType eps(std::initializer_list<std::pair<const std::string, Polarity>> l) { return OrderType{l}; }

}  // namespace

TEST_CASE("node classes agree with the table on all 2x12 pairs") {
    for (Sign s : {P, M})
        for (Op op : kConnectives) {
            CAPTURE(sign_char(s));
            CAPTURE(op_keyword(op));
            std::pair<Sign, Op> k{s, op};
            CHECK(is_delta_adjoint(s, op) == kDelta.count(k) > 0);
            CHECK(is_sra(s, op) == kSra.count(k) > 0);
            CHECK(is_slr(s, op) == kSlr.count(k) > 0);
            CHECK(is_srr(s, op) == kSrr.count(k) > 0);
            NodeClass c = classify_node(s, op);
            CHECK(c != NodeClass::Leaf);
        }
    CHECK(classify_node(P, Op::Or) == NodeClass::DeltaAdjoint);
    CHECK(classify_node(M, Op::Imp) == NodeClass::SLR);
    CHECK(classify_node(P, Op::SBox) == NodeClass::SRA);
    CHECK(classify_node(P, Op::SDia) == NodeClass::SLR);
}

TEST_CASE("signed trees") {
    Formula p = Formula::var("p"), q = Formula::var("q");
    SignedTree t = build_signed_tree(P, dia(p));
    CHECK(t.node_class == NodeClass::SLR);
    CHECK(t.children[0].sign == P);
    SignedTree u = build_signed_tree(M, dia(p));
    CHECK(u.node_class == NodeClass::SRA);
    CHECK(u.children[0].sign == M);
    SignedTree v = build_signed_tree(P, imp(p, q));
    CHECK(v.node_class == NodeClass::SRR);
    CHECK(v.children[0].sign == M);
    CHECK(v.children[1].sign == P);
}

TEST_CASE("critical branches") {
    Formula p = Formula::var("p");
    CHECK(critical_branches(P, sdia(p), eps({{"p", Polarity::One}})).size() == 1);
    CHECK(critical_branches(P, dia(p), eps({{"p", Polarity::Partial}})).empty());
    auto b = critical_branches(P, conj(p, neg(p)), eps({{"p", Polarity::One}}));
    REQUIRE(b.size() == 1);
    CHECK(b[0].leaf_sign == P);
}

TEST_CASE("branch kinds") {
    Formula p = Formula::var("p");
    auto good = branches(P, sdia(box(p)));
    REQUIRE(good.size() == 1);
    BranchKind k = branch_kind(good[0]);
    CHECK(k.good);
    CHECK(k.pia_len == 1);
    CHECK(k.skel_len == 1);
    auto bad = branches(P, box(dia(p)));
    CHECK_FALSE(branch_kind(bad[0]).good);
    auto leaf = branches(P, p);
    BranchKind l = branch_kind(leaf[0]);
    CHECK(l.good);
    CHECK(l.pia_len == 0);
    CHECK(l.skel_len == 0);
}

TEST_CASE("uniformity") {
    Formula p = Formula::var("p"), q = Formula::var("q");
    CHECK(is_eps_uniform(P, dia(p), eps({{"p", Polarity::One}}), false));
    CHECK_FALSE(is_eps_uniform(P, conj(p, neg(p)), eps({{"p", Polarity::One}}), false));
    CHECK_FALSE(is_eps_uniform(P, conj(p, neg(p)), eps({{"p", Polarity::Partial}}), false));
    CHECK(is_eps_uniform(M, sbox(q), eps({{"q", Polarity::One}}), true));
}

TEST_CASE("property: sign flips count negations and implication antecedents") {
    gen::Rng rng(21);
    gen::FormulaShape shape;
    shape.depth = 4;
    shape.expanded = true;
    for (int n = 0; n < 300; ++n) {
        Formula f = gen::formula(rng, shape);
        for (Sign root : {P, M})
            for (const Branch& b : branches(root, f)) {
                int flips = 0;
                for (const auto& s : b.steps)
                    if (s.op == Op::Not || (s.op == Op::Imp && s.via == 0)) ++flips;
                Sign expect = flips % 2 ? flip(root) : root;
                CHECK(b.leaf_sign == expect);
            }
    }
}

TEST_CASE("property: all-skeleton trees have only good branches") {
    gen::Rng rng(22);
    gen::FormulaShape shape;
    shape.depth = 4;
    shape.expanded = true;
    int seen = 0;
    for (int n = 0; n < 2000; ++n) {
        Formula f = gen::formula(rng, shape);
        for (Sign root : {P, M}) {
            auto bs = branches(root, f);
            bool all_skeleton = true;
            for (const auto& b : bs)
                for (const auto& s : b.steps) all_skeleton = all_skeleton && is_skeleton_node(s.sign, s.op);
            if (!all_skeleton) continue;
            ++seen;
            for (const auto& b : bs) CHECK(branch_kind(b).good);
        }
    }
    CHECK(seen > 50);
}
