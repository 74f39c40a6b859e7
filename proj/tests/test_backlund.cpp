#include <gtest/gtest.h>

#include "pvi/backlund.hpp"
#include "pvi/sampling.hpp"

using namespace pvi;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

PQState worked() { return PQState{2, KappaParams(R("1/8"), R("1/8"), R("1/8"), R("1/8")), ProjRat(3), 5}; }

}  // namespace

TEST(Generators, S0WorkedExample) {
    auto out = apply_generator(Gen::s0, worked());
    EXPECT_EQ(out.kappa.kappa0(), R("-1/4"));
    for (int i = 0; i < 4; ++i) EXPECT_EQ(out.kappa.k[i], R("3/8"));
    EXPECT_EQ(out.q, ProjRat(R("61/20")));
    EXPECT_EQ(out.p, Rat(5));
    EXPECT_EQ(apply_generator(Gen::s0, out), worked());
}

TEST(Generators, S1WorkedExample) {
    auto out = apply_generator(Gen::s1, worked());
    EXPECT_EQ(out.kappa.k[0], R("-1/8"));
    EXPECT_EQ(out.kappa.kappa0(), R("3/8"));
    EXPECT_EQ(out.q, ProjRat(3));
    EXPECT_EQ(out.p, R("119/24"));
}

TEST(Generators, DenominatorErrors) {
    auto s = worked();
    s.p = 0;
    try {
        apply_generator(Gen::s0, s);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
    }
    s = worked();
    s.q = ProjRat(0);
    EXPECT_THROW(apply_generator(Gen::s1, s), Error);
}

TEST(Words, ParseAndPrint) {
    auto w = parse_word("r12_34,s0,s3");
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[0], Gen::r12_34);
    EXPECT_EQ(word_str(w), "r12_34,s0,s3");
    EXPECT_TRUE(parse_word("").empty());
    EXPECT_THROW(parse_word("s5"), Error);
}

TEST(Words, LeftToRight) {
    auto s = worked();
    auto w = parse_word("s0,s1");
    EXPECT_EQ(apply_word(w, s), apply_generator(Gen::s1, apply_generator(Gen::s0, s)));
}

TEST(Words, PrintedShiftWordMovesKappa3And4) {
    Sampler smp(3);
    auto s = sample_state(smp);
    while (!relations_defined(s)) s = sample_state(smp);
    auto out = apply_word(kappa_shift_word(), s);
    EXPECT_EQ(out.kappa.k[0], s.kappa.k[0]);
    EXPECT_EQ(out.kappa.k[1], s.kappa.k[1]);
    EXPECT_EQ(out.kappa.k[2], s.kappa.k[2] + 1);
    EXPECT_EQ(out.kappa.k[3], s.kappa.k[3] + 1);
    auto rel = apply_word(kappa_shift_word_relabeled(), s);
    EXPECT_EQ(rel.kappa.k[0], s.kappa.k[0] + 1);
    EXPECT_EQ(rel.kappa.k[1], s.kappa.k[1] + 1);
    EXPECT_EQ(rel.kappa.k[2], s.kappa.k[2]);
    EXPECT_EQ(rel.kappa.k[3], s.kappa.k[3]);
}

TEST(Words, SchlesingerClosedForm) {
    auto s = worked();
    auto closed = schlesinger_composite_qp(s);
    EXPECT_EQ(closed.kappa.k[0], R("7/8"));
    EXPECT_EQ(closed.kappa.k[1], R("7/8"));
    EXPECT_EQ(apply_word(schlesinger_word_relabeled(), s), closed);
    EXPECT_NE(apply_word(schlesinger_word(), s), closed);
}

TEST(Relations, AllHoldOnWorkedExample) {
    auto s = worked();
    ASSERT_TRUE(relations_defined(s));
    auto rs = check_relations(s);
    EXPECT_EQ(rs.size(), 5u + 6u + 4u + 3u + 12u);
    for (const auto& r : rs) EXPECT_TRUE(r.holds) << r.name << " " << r.witness;
}

TEST(Relations, HoldOnSamples) {
    Sampler smp(19);
    int done = 0;
    while (done < 15) {
        auto s = sample_state(smp);
        if (!relations_defined(s)) continue;
        for (const auto& r : check_relations(s)) EXPECT_TRUE(r.holds) << r.name << " " << r.witness;
        ++done;
    }
}

TEST(Fibration, QAndQ) {
    auto s = worked();
    EXPECT_EQ(q_of(s), ProjRat(3));
    EXPECT_EQ(Q_of(s), ProjRat(R("61/20")));
    EXPECT_EQ(Q_of(s), q_of(apply_generator(Gen::s0, s)));
}

TEST(Fibration, Transversality) {
    auto [q, p] = transversality_solve(3, R("61/20"), R("1/4"));
    EXPECT_EQ(q, Rat(3));
    EXPECT_EQ(p, Rat(5));
    try {
        transversality_solve(3, 3, R("1/4"));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoFiniteIntersection);
    }
    EXPECT_THROW(transversality_solve(3, 4, 0), Error);
}

TEST(Symplectic, Product) {
    auto d = symplectic_data(worked());
    EXPECT_EQ(d.jacobian, -worked().kappa.kappa0() / Rat(25));
    EXPECT_EQ(d.product, Rat(-1));
    Sampler smp(5);
    for (int n = 0; n < 20; ++n) EXPECT_TRUE(symplectic_check(sample_state(smp)));
}

TEST(Symplectic, ChartSwap) {
    auto s = worked();
    auto [x, y] = al_chart(s);
    auto [x2, y2] = al_chart(apply_generator(Gen::s0, s));
    EXPECT_EQ(x, y2);
    EXPECT_EQ(y, x2);
}
