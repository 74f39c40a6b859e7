#include <gtest/gtest.h>

#include <set>

#include "pvi/lattice.hpp"
#include "pvi/mconv.hpp"
#include "pvi/stability.hpp"

using namespace pvi;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

std::array<Rat, 4> eps4(const char* a, const char* b, const char* c, const char* d) { return {R(a), R(b), R(c), R(d)}; }

}  // namespace

TEST(Lattice, BasicIntersections) {
    EXPECT_EQ(intersect(DivClass::C0(), DivClass::C0()), -2);
    EXPECT_EQ(intersect(DivClass::C0(), DivClass::F()), 1);
    EXPECT_EQ(intersect(DivClass::F(), DivClass::F()), 0);
    EXPECT_EQ(intersect(DivClass::E(2, true), DivClass::E(2, true)), -1);
    EXPECT_EQ(intersect(DivClass::E(2, true), DivClass::E(1, true)), 0);
    EXPECT_EQ(intersect(DivClass::C1(), DivClass::C1()), 2);
}

TEST(Lattice, Anticanonical) {
    EXPECT_EQ(intersect(DivClass::Y(), DivClass::Y()), 0);
    EXPECT_TRUE(anticanonical_check());
    for (const auto& c : anticanonical_checks()) EXPECT_TRUE(c.holds) << c.name << " " << c.witness;
    for (const auto& c : singular_fiber_decompositions()) EXPECT_TRUE(c.holds) << c.name << " " << c.witness;
    EXPECT_EQ(intersect(DivClass::C1() + DivClass::F(), DivClass::Yred()), 5);
}

TEST(Lattice, SixteenTransversalClasses) {
    auto classes = enumerate_transversal(5);
    ASSERT_EQ(classes.size(), 16u);
    std::set<std::string> labels;
    for (const auto& c : classes) {
        EXPECT_EQ(c.n, 1);
        EXPECT_EQ(c.cls, DivClass::L_sigma(c.sigma));
        EXPECT_EQ(intersect(c.cls, c.cls), 0);
        EXPECT_EQ(intersect(c.cls, DivClass::F()), 1);
        EXPECT_EQ(intersect(c.cls, DivClass::Yred()), 1);
        labels.insert(c.label());
    }
    EXPECT_EQ(labels.size(), 16u);
}

TEST(Lattice, Signature) {
    auto s = gram_signature();
    EXPECT_EQ(s[0], 1);
    EXPECT_EQ(s[1], 9);
}

TEST(Sigma, ParseAndOrder) {
    EXPECT_EQ(parse_sigma("+-+-"), (std::array<int, 4>{1, -1, 1, -1}));
    EXPECT_EQ(sigma_str({1, 1, 1, -1}), "+++-");
    EXPECT_THROW(parse_sigma("++"), Error);
    auto all = all_sigmas();
    ASSERT_EQ(all.size(), 16u);
    EXPECT_EQ(sigma_str(all.front()), "++++");
    EXPECT_EQ(sigma_str(all[1]), "+++-");
    EXPECT_EQ(sigma_str(all.back()), "----");
}

TEST(Exponents, Validation) {
    EXPECT_THROW(ExponentData::make({0, 0, 0, 0}, eps4("1/10", "1/10", "1/10", "1/10")), Error);
    EXPECT_THROW(ExponentData::make({0, 0, 0, R("1/2")}, eps4("1/2", "1/10", "1/10", "1/10")), Error);
    auto e = ExponentData::make({R("3/2"), 0, 0, -1}, eps4("1/10", "1/10", "1/10", "1/10"));
    EXPECT_EQ(e.mu[0], R("1/2"));
    EXPECT_EQ(e.mu[3], Rat(0));
}

TEST(MiddleConvolution, UniformWeights) {
    auto e = ExponentData::from_eps(eps4("1/10", "1/10", "1/10", "1/10"));
    auto out = mc_exponents(e, BetaChoice::canonical({1, 1, 1, 1}, e));
    EXPECT_EQ(out.eps, eps4("3/20", "3/20", "3/20", "3/20"));
    EXPECT_EQ(classify_zone(out.eps).str(), "stable");
}

TEST(MiddleConvolution, LastMinus) {
    auto e = ExponentData::from_eps(eps4("1/10", "1/10", "1/10", "1/10"));
    auto r = mc_exponents_detailed(e, BetaChoice::canonical({1, 1, 1, -1}, e));
    EXPECT_EQ(r.out.eps, eps4("1/4", "1/4", "1/4", "1/20"));
    EXPECT_EQ(r.y[0], R("1/2"));
    // this choice does not keep zone A unstable
    EXPECT_EQ(classify_zone(r.out.eps).str(), "stable");
}

TEST(MiddleConvolution, SumMuNormalized) {
    auto e = ExponentData::make({R("1/3"), R("1/5"), R("1/7"), (R("-1/2") - R("1/3") - R("1/5") - R("1/7")).frac()},
                           eps4("1/7", "1/9", "1/11", "1/13"));
    for (const auto& s : all_sigmas()) {
        auto out = mc_exponents(e, BetaChoice::canonical(s, e));
        Rat sum = out.mu[0] + out.mu[1] + out.mu[2] + out.mu[3];
        EXPECT_EQ((sum + R("1/2")).frac(), Rat(0)) << sigma_str(s);
        for (const auto& x : out.eps) {
            EXPECT_GT(x, Rat(0));
            EXPECT_LT(x, R("1/2"));
        }
    }
}

TEST(MiddleConvolution, InterchangeReport) {
    auto e = ExponentData::from_eps(eps4("1/10", "1/10", "1/10", "1/10"));
    auto rep = zone_interchange_check(e);
    EXPECT_EQ(rep.input.str(), "A");
    ASSERT_TRUE(rep.first_stable.has_value());
    EXPECT_EQ(sigma_str(*rep.first_stable), "++++");
    ASSERT_TRUE(rep.bad_choice_zone.has_value());
    EXPECT_EQ(rep.bad_choice_zone->str(), "stable");
    EXPECT_EQ(rep.table.size(), 16u);
    EXPECT_THROW(zone_interchange_check(ExponentData::from_eps(eps4("1/5", "1/5", "1/5", "1/5"))), Error);
}

TEST(MiddleConvolution, Defect) { EXPECT_EQ(defect(2, 4, {1, 1, 1, 1}), 0); }
