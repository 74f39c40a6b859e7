#include "pvi/parabolic.hpp"

#include <vector>

namespace pvi {

QuasiPar QuasiPar::standard(const Rat& t, const std::array<ProjRat, 4>& u) { return {standard_poles(t), u}; }

bool QuasiPar::has_standard_poles() const {
    return t[0] == ProjRat(0) && t[1] == ProjRat(1) && t[2].is_finite() && t[3].is_inf() && !t[2].value().is_zero() &&
           t[2].value() != Rat(1);
}

AutElement compose(const AutElement& g, const AutElement& h) {
    return {g.a * h.a, h.b + h.a * g.b, h.c + h.a * g.c};
}

AutElement inverse(const AutElement& g) {
    if (g.a.is_zero()) throw Error(ErrorKind::DegenerateInput, "automorphism with a = 0");
    return {g.a.inv(), -g.b / g.a, -g.c / g.a};
}

QuasiPar act(const AutElement& g, const QuasiPar& qp) {
    if (g.a.is_zero()) throw Error(ErrorKind::DegenerateInput, "automorphism with a = 0");
    QuasiPar out = qp;
    for (int i = 0; i < 4; ++i) {
        if (qp.u[i].is_inf()) continue;
        Rat shift = qp.t[i].is_inf() ? g.c : g.b + g.c * qp.t[i].value();
        out.u[i] = (shift + qp.u[i].value()) / g.a;
    }
    return out;
}

std::optional<Linear> interpolant(const QuasiPar& qp, int i, int j) {
    if (qp.u[i].is_inf() || qp.u[j].is_inf()) return std::nullopt;
    if (qp.t[i] == qp.t[j]) throw Error(ErrorKind::DegenerateInput, "coincident poles");
    if (qp.t[i].is_inf()) std::swap(i, j);
    const Rat& ui = qp.u[i].value();
    const Rat& uj = qp.u[j].value();
    const Rat& ti = qp.t[i].value();
    if (qp.t[j].is_inf()) return Linear{ui - uj * ti, uj};
    auto sol = solve_linear({{Rat(1), ti}, {Rat(1), qp.t[j].value()}}, {ui, uj});
    return Linear{sol.particular[0], sol.particular[1]};
}

bool passes_through(const Linear& v, const QuasiPar& qp, int k) {
    return qp.u[k].is_finite() && v.at(qp.t[k]) == qp.u[k].value();
}

namespace {

std::array<int, 3> companions(int skip) {
    std::array<int, 3> out{};
    int n = 0;
    for (int j = 0; j < 4; ++j)
        if (j != skip) out[n++] = j;
    return out;
}

}  // namespace

bool others_colinear(const QuasiPar& qp, int skip) {
    auto c = companions(skip);
    auto v = interpolant(qp, c[0], c[1]);
    return v && passes_through(*v, qp, c[2]);
}

bool is_simple(const QuasiPar& qp) {
    std::vector<int> finite;
    for (int i = 0; i < 4; ++i)
        if (qp.u[i].is_finite()) finite.push_back(i);
    if (finite.size() < 3) return false;
    auto v = interpolant(qp, finite[0], finite[1]);
    for (std::size_t k = 2; k < finite.size(); ++k)
        if (!passes_through(*v, qp, finite[k])) return true;
    return false;
}

ProjRat q_map_parabolic(const QuasiPar& qp) {
    if (!qp.has_standard_poles()) throw Error(ErrorKind::DegenerateInput, "closed-form Q needs poles (0,1,t,inf)");
    const Rat& t = qp.t[2].value();
    // Q = N(u)/D(u) with N, D linear forms in u_1..u_4.
    const std::array<Rat, 4> n{Rat(0), -t, t, -t * (t - 1)};
    const std::array<Rat, 4> d{t - 1, -t, Rat(1), Rat(0)};
    int infinite = -1;
    for (int i = 0; i < 4; ++i) {
        if (!qp.u[i].is_inf()) continue;
        if (infinite >= 0) throw Error(ErrorKind::DegenerateInput, "more than one u_i at infinity");
        infinite = i;
    }
    if (infinite >= 0) return ProjRat::ratio(n[infinite], d[infinite]);
    Rat num, den;
    for (int i = 0; i < 4; ++i) {
        num += n[i] * qp.u[i].value();
        den += d[i] * qp.u[i].value();
    }
    return ProjRat::ratio(num, den);
}

ProjRat q_map_conic(const QuasiPar& qp) {
    // unknowns (v0, v1, w0, w1, w2) of the map O(-1) -> O + O(1)
    RatMatrix m;
    for (int i = 0; i < 4; ++i) {
        const bool tinf = qp.t[i].is_inf();
        const Rat x = tinf ? Rat(0) : qp.t[i].value();
        if (qp.u[i].is_inf()) {
            m.push_back(tinf ? std::vector<Rat>{0, 1, 0, 0, 0} : std::vector<Rat>{1, x, 0, 0, 0});
        } else {
            const Rat& u = qp.u[i].value();
            m.push_back(tinf ? std::vector<Rat>{0, -u, 0, 0, 1} : std::vector<Rat>{-u, -u * x, 1, x, x * x});
        }
    }
    auto sol = solve_linear(m, std::vector<Rat>(4, Rat(0)));
    if (sol.nullspace.size() != 1)
        throw Error(ErrorKind::DegenerateInput, "O(-1) subbundle through the parabolics is not unique");
    const auto& y = sol.nullspace[0];
    return ProjRat::ratio(-y[0], y[1]);
}

PPoint phi_map(const QuasiPar& qp) {
    if (!is_simple(qp)) throw Error(ErrorKind::NotSimple, "quasi-parabolic bundle is not simple");
    ProjRat base = qp.has_standard_poles() ? q_map_parabolic(qp) : q_map_conic(qp);
    for (int i = 0; i < 4; ++i) {
        if (!(qp.t[i] == base)) continue;
        if (qp.u[i].is_inf()) return {base, Sheet::Minus};
        if (!others_colinear(qp, i))
            throw Error(ErrorKind::DegenerateInput, "Q hits a pole without a splitting conic");
        return {base, Sheet::Plus};
    }
    return {base, Sheet::Generic};
}

QuasiPar normalize(const QuasiPar& qp) {
    for (int i = 0; i < 4; ++i) {
        auto c = companions(i);
        bool finite = true;
        for (int j : c) finite = finite && qp.u[j].is_finite();
        if (!finite || others_colinear(qp, i)) continue;
        // b + c t_j - a target_j = -u_j, targets (0, 0, 1)
        const std::array<Rat, 3> target{Rat(0), Rat(0), Rat(1)};
        RatMatrix m;
        std::vector<Rat> rhs;
        for (int k = 0; k < 3; ++k) {
            const int j = c[k];
            if (qp.t[j].is_inf())
                m.push_back({-target[k], Rat(0), Rat(1)});
            else
                m.push_back({-target[k], Rat(1), qp.t[j].value()});
            rhs.push_back(-qp.u[j].value());
        }
        auto sol = solve_linear(m, rhs);
        AutElement g{sol.particular[0], sol.particular[1], sol.particular[2]};
        return act(g, qp);
    }
    throw Error(ErrorKind::NotSimple, "no normalizing frame: quasi-parabolic bundle is not simple");
}

QuasiPar parabolic_from_connection(const PQState& s) {
    build_connection(s);
    const Rat& q = s.q.value();
    const Rat pt = s.p_tilde();
    return QuasiPar::standard(s.t, {ProjRat(-pt / q), ProjRat(-pt / (q - 1)), ProjRat(-pt / (q - s.t)),
                                    ProjRat(s.kappa.kappa0())});
}

QuasiPar alternative_parabolic_from_connection(const PQState& s) {
    build_connection(s);
    const Rat& q = s.q.value();
    const Rat& t = s.t;
    const Rat pt = s.p_tilde();
    const auto& k = s.kappa.k;
    return QuasiPar::standard(t, {ProjRat(-(pt - t * k[0]) / q), ProjRat(-(pt + (t - 1) * k[1]) / (q - 1)),
                                  ProjRat(-(pt - t * (t - 1) * k[2]) / (q - t)),
                                  ProjRat(s.kappa.kappa0() + k[3])});
}

}  // namespace pvi
