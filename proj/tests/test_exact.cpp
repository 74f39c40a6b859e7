#include <gtest/gtest.h>

#include "pvi/exact.hpp"

using namespace pvi;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

}  // namespace

TEST(Rat, ParseAndCanonicalForm) {
    EXPECT_EQ(R("6/8").str(), "3/4");
    EXPECT_EQ(R("-6/8").str(), "-3/4");
    EXPECT_EQ(R("5").str(), "5/1");
    EXPECT_EQ(R("0/7").str(), "0/1");
    EXPECT_EQ(Rat(3, -6), R("-1/2"));
}

TEST(Rat, RejectsBadInput) {
    for (const char* s : {"", "1/0", "abc", "1/", "/2", "1.5"}) {
        try {
            Rat::parse(s);
            ADD_FAILURE() << "accepted " << s;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError) << s;
        }
    }
}

TEST(Rat, FloorAndFrac) {
    EXPECT_EQ(R("7/3").floor(), Rat(2));
    EXPECT_EQ(R("-7/3").floor(), Rat(-3));
    EXPECT_EQ(R("-7/3").frac(), R("2/3"));
    EXPECT_EQ(Rat(4).frac(), Rat(0));
}

TEST(Rat, DivisionByZeroThrows) {
    EXPECT_THROW(Rat(1) / Rat(0), Error);
    EXPECT_THROW(Rat(0).inv(), Error);
}

TEST(Rat, Sqrt) {
    EXPECT_EQ(rat_sqrt(R("49/36")).value(), R("7/6"));
    EXPECT_EQ(rat_sqrt(Rat(0)).value(), Rat(0));
    EXPECT_FALSE(rat_sqrt(Rat(2)).has_value());
    EXPECT_FALSE(rat_sqrt(Rat(-4)).has_value());
}

TEST(ProjRat, InfinityRoundTrip) {
    EXPECT_TRUE(ProjRat::parse("inf").is_inf());
    EXPECT_EQ(ProjRat::inf().str(), "inf");
    EXPECT_EQ(ProjRat::ratio(Rat(3), Rat(0)), ProjRat::inf());
    EXPECT_EQ(ProjRat::ratio(Rat(3), Rat(6)), ProjRat(R("1/2")));
    EXPECT_THROW(ProjRat::ratio(Rat(0), Rat(0)), Error);
    EXPECT_THROW(ProjRat::inf().value(), Error);
}

TEST(Mat2, Arithmetic) {
    Mat2 a{1, 2, 3, 4};
    Mat2 b{0, 1, 1, 0};
    EXPECT_EQ(a * b, (Mat2{2, 1, 4, 3}));
    EXPECT_EQ(a.det(), Rat(-2));
    EXPECT_EQ(a.trace(), Rat(5));
    EXPECT_TRUE((a - a).is_zero());
    Vec2 v{1, 1};
    Vec2 av = a * v;
    EXPECT_EQ(av[0], Rat(3));
    EXPECT_EQ(av[1], Rat(7));
}

TEST(Dual, QuotientRule) {
    // f(x) = x^2/(x-1) at x = 3: f = 9/2, f' = (2x(x-1) - x^2)/(x-1)^2 = 3/4
    Dual x = Dual::variable(3);
    Dual f = x * x / (x - Dual(1));
    EXPECT_EQ(f.v, R("9/2"));
    EXPECT_EQ(f.d, R("3/4"));
    EXPECT_THROW(inv(Dual(0, 1)), Error);
}

TEST(Poly, EvalDivideDerivative) {
    Poly p({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    EXPECT_EQ(p(2), Rat(0));
    EXPECT_EQ(p(4), Rat(6));
    Rat rem;
    Poly q = p.divide_linear(1, &rem);
    EXPECT_EQ(rem, Rat(0));
    EXPECT_EQ(q, Poly({6, -5, 1}));
    EXPECT_EQ(p.derivative(), Poly({11, -12, 3}));
    EXPECT_EQ((p - p).degree(), -1);
}

TEST(SolveLinear, UniqueSolution) {
    RatMatrix m{{2, 1}, {1, -1}};
    auto s = solve_linear(m, {5, 1});
    EXPECT_EQ(s.rank, 2u);
    EXPECT_EQ(s.particular[0], Rat(2));
    EXPECT_EQ(s.particular[1], Rat(1));
    EXPECT_TRUE(s.nullspace.empty());
}

TEST(SolveLinear, NullspaceAndInconsistency) {
    RatMatrix m{{1, 2, 3}, {2, 4, 6}};
    auto s = solve_linear(m, {0, 0});
    EXPECT_EQ(s.rank, 1u);
    ASSERT_EQ(s.nullspace.size(), 2u);
    for (const auto& v : s.nullspace) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], Rat(0));
    try {
        solve_linear(m, {1, 0});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
    }
}

TEST(Eig2, RationalSpectrum) {
    Mat2 m{2, 1, 0, -3};
    auto e = eig2(m);
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0].value, Rat(2));
    EXPECT_EQ(e[1].value, Rat(-3));
    for (const auto& p : e) {
        Vec2 mv = m * p.vector;
        EXPECT_EQ(mv[0], p.value * p.vector[0]);
        EXPECT_EQ(mv[1], p.value * p.vector[1]);
    }
}

TEST(Eig2, IrrationalSpectrumThrows) {
    try {
        eig2(Mat2{0, 1, 2, 0});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedField);
    }
}
