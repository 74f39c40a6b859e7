#pragma once

#include <array>
#include <optional>

#include "pvi/connection.hpp"
#include "pvi/exact.hpp"

namespace pvi {

// Parabolic lines P_i = <e + u_i f> on O + O(1); at a pole at infinity u_i is read in the frame <e, xf>.
struct QuasiPar {
    std::array<ProjRat, 4> t;
    std::array<ProjRat, 4> u;

    static QuasiPar standard(const Rat& t, const std::array<ProjRat, 4>& u);
    bool has_standard_poles() const;
    friend bool operator==(const QuasiPar&, const QuasiPar&) = default;
};

// e -> a e + (b + c x) f modulo scalars.
struct AutElement {
    Rat a = 1;
    Rat b;
    Rat c;
    friend bool operator==(const AutElement&, const AutElement&) = default;
};

// act(compose(g, h), x) == act(g, act(h, x))
AutElement compose(const AutElement& g, const AutElement& h);
AutElement inverse(const AutElement& g);
QuasiPar act(const AutElement& g, const QuasiPar& qp);

// Degree-one section v0 + v1 x of O(1); evaluated at infinity it gives the leading coefficient.
struct Linear {
    Rat v0;
    Rat v1;
    Rat at(const ProjRat& x) const { return x.is_inf() ? v1 : v0 + v1 * x.value(); }
    friend bool operator==(const Linear&, const Linear&) = default;
};

// The line through U_i and U_j; empty when either u is infinite.
std::optional<Linear> interpolant(const QuasiPar& qp, int i, int j);
bool passes_through(const Linear& v, const QuasiPar& qp, int k);

// True when the three U_j other than index `skip` lie on one degree-zero subbundle.
bool others_colinear(const QuasiPar& qp, int skip);

bool is_simple(const QuasiPar& qp);

// Closed form for poles (0,1,t,inf).
ProjRat q_map_parabolic(const QuasiPar& qp);

// Zero of the first component of the O(-1) subbundle through all four parabolic lines; any pole layout.
ProjRat q_map_conic(const QuasiPar& qp);

PPoint phi_map(const QuasiPar& qp);

// Canonical representative of the Aut orbit of a simple structure: the first index i whose three
// companions are finite and not colinear is left free, the companions are moved to (0, 0, 1).
QuasiPar normalize(const QuasiPar& qp);

// Slopes of the r^- eigenvectors of the normal form.
QuasiPar parabolic_from_connection(const PQState& s);
// Slopes of the r^+ eigenvectors.
QuasiPar alternative_parabolic_from_connection(const PQState& s);

}  // namespace pvi
