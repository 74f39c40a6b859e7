#include <gtest/gtest.h>

#include "pvi/connection.hpp"
#include "pvi/parabolic.hpp"

using namespace pvi;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

// t = 2, kappa_1..4 = 1/8 (so kappa0 = 1/4), q = 3, p = 5
PQState worked() { return PQState{2, KappaParams(R("1/8"), R("1/8"), R("1/8"), R("1/8")), ProjRat(3), 5}; }

}  // namespace

TEST(Kappa, AffineRelation) {
    auto k = KappaParams(R("1/8"), R("1/8"), R("1/8"), R("1/8"));
    EXPECT_EQ(k.kappa0(), R("1/4"));
    EXPECT_NO_THROW(KappaParams::with_kappa0(R("1/4"), R("1/8"), R("1/8"), R("1/8"), R("1/8")));
    EXPECT_THROW(KappaParams::with_kappa0(R("1/3"), R("1/8"), R("1/8"), R("1/8"), R("1/8")), Error);
}

TEST(Kappa, Genericity) {
    EXPECT_TRUE(kappa_generic(KappaParams(R("1/8"), R("1/8"), R("1/8"), R("1/8"))));
    EXPECT_FALSE(kappa_generic(KappaParams(Rat(1), R("1/8"), R("1/8"), R("1/8"))));
    // 1/2 + 1/2 + 1/4 - 1/4 = 1 is odd
    EXPECT_FALSE(kappa_generic(KappaParams(R("1/2"), R("1/2"), R("1/4"), R("1/4"))));
}

TEST(Connection, WorkedExampleResidues) {
    auto c = build_connection(worked());
    EXPECT_EQ(c.A1.det(), R("-1/256"));
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(c.residue(i).trace(), Rat(0));
        EXPECT_EQ(c.residue(i).det(), R("-1/256"));
    }
    EXPECT_EQ(c.A1, (Mat2{R("-239/16"), R("-3/2"), R("595/4"), R("239/16")}));
    EXPECT_EQ(c.A4, (Mat2{R("-3/16"), Rat(-1), R("3/32"), R("-13/16")}));
}

TEST(Connection, WorkedExampleApparentPoint) {
    auto s = worked();
    auto c = build_connection(s);
    EXPECT_EQ(apparent_point(c), ProjRat(3));
    EXPECT_EQ(c.eval(3).a12, Rat(0));
    // The raw (2,2) entry is not p; the invariant correction restores it.
    EXPECT_EQ(c.eval(3).a22, R("469/96"));
    EXPECT_EQ(p_invariant(c, s.kappa, 3), Rat(5));
}

TEST(Connection, InfinityResidueFromChart) {
    auto c = build_connection(worked());
    EXPECT_EQ(c.infinity_residue_from_chart(), c.A4);
    // eigenvalues (kappa4 - 1)/2 and -(kappa4 + 1)/2
    EXPECT_EQ(c.A4.trace(), Rat(-1));
    EXPECT_EQ(c.A4.det(), (R("1/8") - 1) / 2 * (-(R("1/8") + 1) / 2));
}

TEST(Connection, EigenTableGaps) {
    auto s = worked();
    auto c = build_connection(s);
    auto tab = eigen_table(c, s);
    for (int i = 0; i < 4; ++i) {
        const auto& e = tab[i];
        EXPECT_EQ(e.r_minus - e.r_plus, s.kappa.k[i]) << "pole " << i + 1;
        Vec2 mv = c.residue(i + 1) * e.v_minus;
        EXPECT_EQ(mv[0], e.r_minus * e.v_minus[0]);
        EXPECT_EQ(mv[1], e.r_minus * e.v_minus[1]);
    }
}

TEST(Connection, DegenerateInputs) {
    auto s = worked();
    s.q = ProjRat(1);
    try {
        build_connection(s);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NormalFormDegenerate);
    }
    s = worked();
    s.kappa = KappaParams(Rat(1), R("1/8"), R("1/8"), R("1/8"));
    try {
        build_connection(s);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SpecialParameters);
    }
}

TEST(Connection, ResidueVectorFuchs) {
    auto r = ResidueVector::from_kappa(KappaParams(R("1/8"), R("1/8"), R("1/8"), R("1/8")));
    EXPECT_EQ(r.fuchs_defect(), Rat(0));
    EXPECT_TRUE(kostov_generic(r));
    auto r2 = elementary_transform_residues(r, 0);
    EXPECT_EQ(r2.degree, 0);
}

TEST(Parabolic, WorkedExampleSlopes) {
    auto qp = parabolic_from_connection(worked());
    EXPECT_EQ(qp.u[0], ProjRat(-10));
    EXPECT_EQ(qp.u[1], ProjRat(-15));
    EXPECT_EQ(qp.u[2], ProjRat(-30));
    EXPECT_EQ(qp.u[3], ProjRat(R("1/4")));
    EXPECT_EQ(q_map_parabolic(qp), ProjRat(R("61/20")));
    EXPECT_EQ(q_map_conic(qp), ProjRat(R("61/20")));
}

TEST(Parabolic, QMapIsAutInvariant) {
    auto qp = parabolic_from_connection(worked());
    AutElement g{R("3/2"), R("-7"), R("2/5")};
    EXPECT_EQ(q_map_parabolic(act(g, qp)), q_map_parabolic(qp));
    EXPECT_EQ(act(compose(g, inverse(g)), qp), qp);
    EXPECT_EQ(normalize(act(g, qp)), normalize(qp));
}

TEST(Parabolic, PhiSheets) {
    Rat t = 2;
    // u1 = inf lies on the O(1) fiber; the image sits on the minus sheet over 0.
    auto minus = QuasiPar::standard(t, {ProjRat::inf(), ProjRat(0), ProjRat(0), ProjRat(1)});
    auto p = phi_map(minus);
    EXPECT_EQ(p.base, ProjRat(0));
    EXPECT_EQ(p.sheet, Sheet::Minus);
    auto generic = parabolic_from_connection(worked());
    EXPECT_EQ(phi_map(generic).sheet, Sheet::Generic);
}

TEST(Parabolic, NotSimpleRejected) {
    // all four on the degree-zero subbundle with v = 0
    auto qp = QuasiPar::standard(2, {ProjRat(0), ProjRat(0), ProjRat(0), ProjRat(0)});
    EXPECT_FALSE(is_simple(qp));
    try {
        phi_map(qp);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSimple);
    }
}
