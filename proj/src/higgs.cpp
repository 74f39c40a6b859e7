#include "pvi/higgs.hpp"

#include <algorithm>

namespace pvi {

namespace {

bool proj_less(const ProjRat& a, const ProjRat& b) {
    if (a.is_inf()) return false;
    if (b.is_inf()) return true;
    return a.value() < b.value();
}

void sort_divisor(std::vector<ProjRat>& d) { std::stable_sort(d.begin(), d.end(), proj_less); }

int pole_index(const ProjRat& base, const Rat& t) {
    auto poles = standard_poles(t);
    for (int i = 0; i < 4; ++i)
        if (poles[i] == base) return i;
    return -1;
}

}  // namespace

HiggsLimit HiggsLimit::theta_zero(const QuasiPar& qp) {
    HiggsLimit h;
    h.kind = Kind::ThetaZero;
    h.qp = qp;
    return h;
}

HiggsLimit HiggsLimit::graded(int deg_L, const std::array<bool, 4>& contact, std::vector<ProjRat> divisor) {
    HiggsLimit h;
    h.kind = Kind::Graded;
    h.deg_L = deg_L;
    h.contact = contact;
    sort_divisor(divisor);
    h.divisor = std::move(divisor);
    return h;
}

std::vector<ProjRat> theta_divisor(const FourPoleConnection& c, const Subbundle& l) {
    Poly v, w;
    const auto& y = l.coefficients;
    switch (l.degree) {
    case 1: w = Poly::constant(1); break;
    case 0: v = Poly::constant(1); w = Poly({y[0], y[1]}); break;
    case -1: v = Poly({y[0], y[1]}); w = Poly({y[2], y[3], y[4]}); break;
    default: throw Error(ErrorKind::DegenerateInput, "subbundle degree out of range");
    }
    const Poly D = Poly::x_minus(0) * Poly::x_minus(1) * Poly::x_minus(c.t);
    // a e + b f = nabla(v e + w f), cleared of the poles; theta is v b - w a
    const Poly a = D * v.derivative() + c.cleared_entry(1, 1) * v + c.cleared_entry(1, 2) * w;
    const Poly b = D * w.derivative() + c.cleared_entry(2, 1) * v + c.cleared_entry(2, 2) * w;
    Poly n = v * b - w * a;
    if (n.is_zero()) throw Error(ErrorKind::DegenerateInput, "subbundle is invariant under the connection");

    const int expected = 3 - 2 * l.degree;
    if (n.degree() > expected) throw Error(ErrorKind::DegenerateInput, "connection is not logarithmic at infinity");
    std::vector<ProjRat> out(expected - n.degree(), ProjRat::inf());

    const std::array<Rat, 3> finite_poles{Rat(0), Rat(1), c.t};
    for (int k = 0; k < 3; ++k) {
        if (!l.contact[k]) continue;
        Rat rem;
        n = n.divide_linear(finite_poles[k], &rem);
        if (!rem.is_zero()) throw Error(ErrorKind::DegenerateInput, "theta does not vanish at a contact pole");
        out.push_back(finite_poles[k]);
    }
    while (n.degree() >= 1) {
        if (n.degree() == 1) {
            out.push_back(-n.coeff(0) / n.coeff(1));
            break;
        }
        if (n.degree() > 2) throw Error(ErrorKind::UnsupportedField, "theta divisor of degree > 2 off the poles");
        const Rat &c0 = n.coeff(0), &c1 = n.coeff(1), &c2 = n.coeff(2);
        auto r = rat_sqrt(c1 * c1 - Rat(4) * c0 * c2);
        if (!r) throw Error(ErrorKind::UnsupportedField, "theta zeros are irrational");
        Rat root = (-c1 + *r) / (Rat(2) * c2), rem;
        out.push_back(root);
        n = n.divide_linear(root, &rem);
    }
    sort_divisor(out);
    return out;
}

HiggsLimit higgs_limit(const PQState& s, const Weights& w) {
    const QuasiPar qp = parabolic_from_connection(s);
    auto l = find_destabilizer(qp, w);
    if (!l) return HiggsLimit::theta_zero(normalize(qp));
    return HiggsLimit::graded(l->degree, l->contact, theta_divisor(build_connection(s), *l));
}

HiggsLimit v_alpha_unstable(const PPoint& point, const Rat& t) {
    std::array<bool, 4> contact{};
    const int i = pole_index(point.base, t);
    if (i >= 0 && point.sheet == Sheet::Minus) contact[i] = true;
    return HiggsLimit::graded(1, contact, {point.base});
}

QuasiPar point_representative(const PPoint& point, const Rat& t) {
    const int i = pole_index(point.base, t);
    if (i < 0) {
        if (point.sheet != Sheet::Generic) throw Error(ErrorKind::DegenerateInput, "sheet label away from the poles");
        const Rat& Q = point.base.value();
        return QuasiPar::standard(t, {ProjRat(0), ProjRat(1), ProjRat(t * (Q - 1) / (Q - t)), ProjRat(0)});
    }
    std::array<ProjRat, 4> u{};
    if (point.sheet == Sheet::Minus) {
        // U_i in the O(1) fiber, companions at (0, 0, 1)
        int seen = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) u[j] = ProjRat(seen++ == 2 ? 1 : 0);
        u[i] = ProjRat::inf();
    } else if (point.sheet == Sheet::Plus) {
        u[i] = ProjRat(1);
    } else {
        throw Error(ErrorKind::DegenerateInput, "a pole needs a plus or minus sheet");
    }
    return QuasiPar::standard(t, u);
}

HiggsLimit v_alpha_stable(const PPoint& point, const Rat& t, const Weights& w) {
    if (classify_zone(w).kind != ZoneKind::Stable) throw Error(ErrorKind::DegenerateInput, "weights are not in the stable zone");
    const int i = pole_index(point.base, t);
    if (i >= 0) {
        const Branch br = stable_subzone_branch(w, i);
        const auto poles = standard_poles(t);
        if (point.sheet == Sheet::Minus && br == Branch::OriginUnstable) {
            std::array<bool, 4> contact{};
            contact[i] = true;
            return HiggsLimit::graded(1, contact, {poles[i]});
        }
        if (point.sheet == Sheet::Plus && br == Branch::ColinearUnstable) {
            std::array<bool, 4> contact{true, true, true, true};
            contact[i] = false;
            std::vector<ProjRat> div;
            for (int j = 0; j < 4; ++j)
                if (j != i) div.push_back(poles[j]);
            return HiggsLimit::graded(0, contact, div);
        }
    }
    return HiggsLimit::theta_zero(normalize(point_representative(point, t)));
}

}  // namespace pvi
