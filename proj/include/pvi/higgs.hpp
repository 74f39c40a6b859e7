#pragma once

#include <array>
#include <vector>

#include "pvi/connection.hpp"
#include "pvi/parabolic.hpp"
#include "pvi/stability.hpp"

namespace pvi {

// u -> 0 limit of (E, u nabla, P). theta is kept only through its zero divisor and the contact data of L.
struct HiggsLimit {
    enum class Kind { ThetaZero, Graded };
    Kind kind = Kind::ThetaZero;
    QuasiPar qp;                     // ThetaZero: normalized representative of the Aut orbit
    int deg_L = 0;                   // Graded
    std::array<bool, 4> contact{};   // Graded: poles where P_i = L
    std::vector<ProjRat> divisor;    // Graded: finite points ascending, then infinity

    static HiggsLimit theta_zero(const QuasiPar& qp);
    static HiggsLimit graded(int deg_L, const std::array<bool, 4>& contact, std::vector<ProjRat> divisor);
    friend bool operator==(const HiggsLimit&, const HiggsLimit&) = default;
};

// Zero divisor of L -> (E/L) (x) Omega(log D) induced by the connection, with multiplicity.
std::vector<ProjRat> theta_divisor(const FourPoleConnection& c, const Subbundle& l);

HiggsLimit higgs_limit(const PQState& s, const Weights& w);

// The zone-A correspondence: L = O(1), theta vanishing at the base point.
HiggsLimit v_alpha_unstable(const PPoint& point, const Rat& t);

// Representative structure over a point of the non-separated line with poles (0, 1, t, inf).
QuasiPar point_representative(const PPoint& point, const Rat& t);

HiggsLimit v_alpha_stable(const PPoint& point, const Rat& t, const Weights& w);

}  // namespace pvi
