#include <gtest/gtest.h>

#include "pvi/connection.hpp"
#include "pvi/higgs.hpp"
#include "pvi/parabolic.hpp"
#include "pvi/sampling.hpp"
#include "pvi/stability.hpp"

using namespace pvi;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

std::array<Rat, 4> eps4(const char* a, const char* b, const char* c, const char* d) { return {R(a), R(b), R(c), R(d)}; }

PQState worked() { return PQState{2, KappaParams(R("1/8"), R("1/8"), R("1/8"), R("1/8")), ProjRat(3), 5}; }

}  // namespace

TEST(Weights, RangeEnforced) {
    EXPECT_THROW(Weights::from_eps(eps4("0", "1/10", "1/10", "1/10")), Error);
    EXPECT_THROW(Weights::from_eps(eps4("1/2", "1/10", "1/10", "1/10")), Error);
    EXPECT_NO_THROW(Weights::from_eps(eps4("1/10", "1/10", "1/10", "1/10")));
}

TEST(Zones, Examples) {
    EXPECT_EQ(classify_zone(eps4("1/10", "1/10", "1/10", "1/10")).str(), "A");
    EXPECT_EQ(classify_zone(eps4("2/5", "2/5", "2/5", "2/5")).str(), "B");
    EXPECT_EQ(classify_zone(eps4("2/5", "2/5", "1/20", "1/20")).str(), "C12");
    EXPECT_EQ(classify_zone(eps4("1/20", "2/5", "1/20", "2/5")).str(), "C24");
    EXPECT_EQ(classify_zone(eps4("1/5", "1/5", "1/5", "1/5")).str(), "stable");
}

TEST(Zones, WallsThrow) {
    for (auto e : {eps4("1/8", "1/8", "1/8", "1/8"), eps4("3/8", "3/8", "3/8", "3/8"), eps4("3/10", "3/10", "1/20", "1/20")}) {
        try {
            classify_zone(e);
            ADD_FAILURE();
        } catch (const Error& err) {
            EXPECT_EQ(err.kind(), ErrorKind::SpecialWeights);
        }
    }
}

TEST(Zones, LabelRoundTrip) {
    for (const auto& z : ZoneLabel::unstable_labels()) EXPECT_EQ(ZoneLabel::parse(z.str()), z);
    EXPECT_EQ(ZoneLabel::unstable_labels().size(), 8u);
    EXPECT_THROW(ZoneLabel::parse("C21"), Error);
}

TEST(Zones, EtPairMovesAToC) {
    auto w = Weights::from_eps(eps4("1/10", "1/10", "1/10", "1/10"));
    auto w2 = et_pair(w, 0, 1);
    EXPECT_EQ(w2.eps, eps4("2/5", "2/5", "1/10", "1/10"));
    EXPECT_EQ(w2.mu[0], R("-1/2"));
    EXPECT_EQ(classify_zone(w2).str(), "C12");
    EXPECT_EQ(classify_zone(et_pair(et_pair(w, 0, 1), 2, 3)).str(), "B");
    // twice is the identity on eps and shifts mu by -1 at both poles
    auto w3 = et_pair(w2, 0, 1);
    EXPECT_EQ(w3.eps, w.eps);
    EXPECT_EQ(w3.mu[0], Rat(-1));
    EXPECT_EQ(w3.mu[2], Rat(0));
}

TEST(Zones, NonspecialWeights) {
    std::array<std::array<Rat, 2>, 4> a{};
    for (auto& x : a) x = {R("1/10"), R("-1/10")};
    EXPECT_TRUE(nonspecial_weights(a, 1));
    a[0] = {R("1/2"), R("-1/2")};
    a[1] = {R("1/2"), R("-1/2")};
    a[2] = {R("1/4"), R("-1/4")};
    a[3] = {R("1/4"), R("-1/4")};
    EXPECT_FALSE(nonspecial_weights(a, 1));
}

TEST(Destabilizer, ZoneAIsO1) {
    auto qp = parabolic_from_connection(worked());
    auto l = find_destabilizer(qp, Weights::from_eps(eps4("1/10", "1/10", "1/10", "1/10")));
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(l->degree, 1);
    EXPECT_TRUE(l->contact_list().empty());
    EXPECT_EQ(stability_excess(*l, eps4("1/10", "1/10", "1/10", "1/10")), R("3/5"));
}

TEST(Destabilizer, ThreeColinear) {
    // v = 1 + x meets U_2, U_3, U_4 on poles (0, 1, 2, inf)
    auto qp = QuasiPar::standard(2, {ProjRat(5), ProjRat(2), ProjRat(3), ProjRat(1)});
    try {
        find_destabilizer(qp, Weights::from_eps(eps4("1/4", "1/4", "1/4", "1/4")));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SpecialWeights);
    }
    auto l = find_destabilizer(qp, Weights::from_eps(eps4("1/5", "27/100", "27/100", "27/100")));
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(l->degree, 0);
    EXPECT_EQ(l->contact_list(), (std::vector<int>{1, 2, 3}));
}

TEST(Destabilizer, StableZoneHasNone) {
    auto qp = parabolic_from_connection(worked());
    EXPECT_FALSE(find_destabilizer(qp, Weights::from_eps(eps4("1/5", "1/5", "1/5", "1/5"))).has_value());
}

TEST(Destabilizer, ZoneBIsMinusOne) {
    auto qp = parabolic_from_connection(worked());
    auto l = find_destabilizer(qp, Weights::from_eps(eps4("2/5", "2/5", "2/5", "2/5")));
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(l->degree, -1);
    EXPECT_EQ(l->contact_list().size(), 4u);
}

TEST(Destabilizer, CandidatesPassThroughTheirContacts) {
    Sampler s(7);
    for (int n = 0; n < 30; ++n) {
        Rat t = sample_t(s);
        auto qp = sample_simple_qp(s, t, 2);
        for (const auto& l : candidate_subbundles(qp)) {
            if (l.degree != 0) continue;
            Linear v{l.coefficients[0], l.coefficients[1]};
            for (int k = 0; k < 4; ++k) EXPECT_EQ(passes_through(v, qp, k), l.contact[k]);
        }
    }
}

TEST(Destabilizer, IgnoresMu) {
    Sampler s(23);
    for (int n = 0; n < 40; ++n) {
        Rat t = sample_t(s);
        auto qp = sample_simple_qp(s, t, 1);
        auto eps = sample_eps(s);
        std::array<Rat, 4> mu{s.rat(), s.rat(), s.rat(), s.rat()};
        EXPECT_EQ(find_destabilizer(qp, Weights::make(mu, eps)), find_destabilizer(qp, Weights::from_eps(eps)));
        EXPECT_EQ(classify_zone(Weights::make(mu, eps)), classify_zone(eps));
    }
}

TEST(Branch, Examples) {
    EXPECT_EQ(stable_subzone_branch(Weights::from_eps(eps4("1/5", "1/5", "1/5", "1/5")), 0), Branch::OriginUnstable);
    EXPECT_EQ(stable_subzone_branch(Weights::from_eps(eps4("1/20", "2/5", "2/5", "2/5")), 0), Branch::ColinearUnstable);
    EXPECT_THROW(stable_subzone_branch(Weights::from_eps(eps4("1/10", "1/10", "1/10", "1/10")), 0), Error);
}

TEST(Higgs, ZoneALimitIsApparentPoint) {
    auto s = worked();
    auto h = higgs_limit(s, Weights::from_eps(eps4("1/10", "1/10", "1/10", "1/10")));
    EXPECT_EQ(h.kind, HiggsLimit::Kind::Graded);
    EXPECT_EQ(h.deg_L, 1);
    ASSERT_EQ(h.divisor.size(), 1u);
    EXPECT_EQ(h.divisor[0], ProjRat(3));
    EXPECT_EQ(h, v_alpha_unstable(PPoint{ProjRat(3), Sheet::Generic}, 2));
}

TEST(Higgs, StableLimitIsThetaZero) {
    auto s = worked();
    auto w = Weights::from_eps(eps4("1/5", "1/5", "1/5", "1/5"));
    auto h = higgs_limit(s, w);
    EXPECT_EQ(h.kind, HiggsLimit::Kind::ThetaZero);
    EXPECT_EQ(q_map_parabolic(h.qp), ProjRat(R("61/20")));
    EXPECT_EQ(h, v_alpha_stable(phi_map(parabolic_from_connection(s)), 2, w));
}

TEST(Higgs, DivisorDegree) {
    // 3 - 2 deg L points counted with multiplicity
    Sampler smp(11);
    int seen = 0;
    for (int n = 0; n < 40 && seen < 10; ++n) {
        auto s = sample_state(smp);
        for (const char* z : {"B", "C13"}) {
            auto w = Weights::from_eps(sample_eps_in_zone(smp, ZoneLabel::parse(z)));
            try {
                auto h = higgs_limit(s, w);
                ASSERT_EQ(h.kind, HiggsLimit::Kind::Graded);
                EXPECT_EQ(static_cast<int>(h.divisor.size()), 3 - 2 * h.deg_L);
                ++seen;
            } catch (const Error& e) {
                EXPECT_EQ(e.kind(), ErrorKind::UnsupportedField) << e.what();
            }
        }
    }
    EXPECT_GT(seen, 0);
}

TEST(Higgs, PointRepresentatives) {
    Rat t = 3;
    for (int i = 0; i < 4; ++i) {
        auto poles = standard_poles(t);
        for (Sheet sh : {Sheet::Plus, Sheet::Minus}) {
            PPoint pt{poles[i], sh};
            EXPECT_EQ(phi_map(point_representative(pt, t)), pt) << i << " " << sheet_name(sh);
        }
    }
    PPoint g{ProjRat(R("7/2")), Sheet::Generic};
    EXPECT_EQ(phi_map(point_representative(g, t)), g);
}
