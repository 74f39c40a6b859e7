#include "pvi/connection.hpp"

namespace pvi {

KappaParams KappaParams::with_kappa0(const Rat& k0, const Rat& k1, const Rat& k2, const Rat& k3, const Rat& k4) {
    KappaParams k(k1, k2, k3, k4);
    if (k.kappa0() != k0)
        throw Error(ErrorKind::DegenerateInput,
                    "kappa0 = " + k0.str() + " violates 2k0+k1+k2+k3+k4=1 (expected " + k.kappa0().str() + ")");
    return k;
}

bool kappa_generic(const KappaParams& k) {
    for (const auto& x : k.k)
        if (x.is_integer()) return false;
    for (int mask = 0; mask < 16; ++mask) {
        Rat s;
        for (int i = 0; i < 4; ++i) s += (mask >> i & 1) ? -k.k[i] : k.k[i];
        if (s.is_integer() && (s.num() % 2) != 0) return false;
    }
    return true;
}

ResidueVector ResidueVector::from_kappa(const KappaParams& k) {
    ResidueVector r;
    Rat half(1, 2);
    for (int i = 0; i < 4; ++i) {
        r.r_minus[i] = k.k[i] * half;
        r.r_plus[i] = -k.k[i] * half;
    }
    r.r_minus[3] -= half;
    r.r_plus[3] -= half;
    r.lambda = 1;
    r.degree = 1;
    return r;
}

Rat ResidueVector::fuchs_defect() const {
    Rat s = lambda * Rat(degree);
    for (int i = 0; i < 4; ++i) s += r_plus[i] + r_minus[i];
    return s;
}

bool kostov_generic(const ResidueVector& r) {
    for (int mask = 0; mask < 16; ++mask) {
        Rat s;
        for (int i = 0; i < 4; ++i) s += (mask >> i & 1) ? r.r_minus[i] : r.r_plus[i];
        if (s.is_integer()) return false;
    }
    return true;
}

bool nonresonant(const ResidueVector& r) {
    for (int i = 0; i < 4; ++i)
        if ((r.r_plus[i] - r.r_minus[i]).is_integer()) return false;
    return true;
}

ResidueVector elementary_transform_residues(const ResidueVector& r, int i) {
    if (i < 0 || i > 3) throw Error(ErrorKind::DegenerateInput, "pole index out of range");
    ResidueVector o = r;
    o.r_plus[i] = r.r_minus[i];
    o.r_minus[i] = r.r_plus[i] + r.lambda;
    o.degree = r.degree - 1;
    return o;
}

Rat PQState::p_tilde() const {
    const Rat& x = q.value();
    return x * (x - 1) * (x - t) * p;
}

const Mat2& FourPoleConnection::residue(int i) const {
    switch (i) {
    case 1: return A1;
    case 2: return A2;
    case 3: return A3;
    case 4: return A4;
    }
    throw Error(ErrorKind::DegenerateInput, "pole index out of range");
}

Mat2 FourPoleConnection::eval(const Rat& x) const {
    return x.inv() * A1 + (x - 1).inv() * A2 + (x - t).inv() * A3 + C;
}

Poly FourPoleConnection::cleared_entry(int row, int col) const {
    auto pick = [&](const Mat2& m) -> const Rat& {
        if (row == 1) return col == 1 ? m.a11 : m.a12;
        return col == 1 ? m.a21 : m.a22;
    };
    Poly x0 = Poly::x_minus(0), x1 = Poly::x_minus(1), xt = Poly::x_minus(t);
    return pick(A1) * (x1 * xt) + pick(A2) * (x0 * xt) + pick(A3) * (x0 * x1) + pick(C) * (x0 * x1 * xt);
}

Mat2 FourPoleConnection::infinity_residue_from_chart() const {
    if (!C.a11.is_zero() || !C.a12.is_zero() || !C.a22.is_zero())
        throw Error(ErrorKind::DegenerateInput, "constant term is not logarithmic at infinity");
    if (!(A1.a12 + A2.a12 + A3.a12).is_zero())
        throw Error(ErrorKind::DegenerateInput, "(1,2) residues do not cancel; pole of order two at infinity");
    return {-(A1.a11 + A2.a11 + A3.a11), -(A2.a12 + t * A3.a12), -C.a21, -(A1.a22 + A2.a22 + A3.a22) - 1};
}

namespace {

void check_t(const Rat& t) {
    if (t.is_zero() || t == Rat(1)) throw Error(ErrorKind::NormalFormDegenerate, "t must avoid 0 and 1");
}

void check_kappa(const KappaParams& k) {
    if (!kappa_generic(k)) throw Error(ErrorKind::SpecialParameters, "kappa is not Kostov-generic");
}

}  // namespace

FourPoleConnection build_connection(const PQState& s) {
    check_t(s.t);
    if (s.q.is_inf()) throw Error(ErrorKind::NormalFormDegenerate, "q = inf");
    const Rat& q = s.q.value();
    const Rat& t = s.t;
    if (q.is_zero() || q == Rat(1) || q == t)
        throw Error(ErrorKind::NormalFormDegenerate, "q = " + q.str() + " is a pole");
    check_kappa(s.kappa);

    const Rat k0 = s.kappa.kappa0();
    const Rat& k1 = s.kappa.k[0];
    const Rat& k2 = s.kappa.k[1];
    const Rat& k3 = s.kappa.k[2];
    const Rat& k4 = s.kappa.k[3];
    const Rat h(1, 2);
    const Rat pt = s.p_tilde();
    const Rat t1 = t - 1;
    const Rat tt = t * t1;

    FourPoleConnection c;
    c.t = t;
    c.A1 = {-pt / t + k1 * h, -q / t, pt * (pt - t * k1) / (t * q), pt / t - k1 * h};
    c.A2 = {pt / t1 + k2 * h, (q - 1) / t1, -pt * (pt + t1 * k2) / (t1 * (q - 1)), -pt / t1 - k2 * h};
    c.A3 = {-pt / tt + k3 * h, -(q - t) / tt, pt * (pt - tt * k3) / (tt * (q - t)), pt / tt - k3 * h};
    c.A4 = {k0 + k4 * h - h, Rat(-1), k0 * (k0 + k4), -k0 - k4 * h - h};
    c.C = {0, 0, -k0 * (k0 + k4), 0};
    return c;
}

FourPoleConnection build_connection_Qp(const Rat& t, const KappaParams& kappa, const Rat& Q, const Rat& p) {
    check_t(t);
    if (Q.is_zero() || Q == Rat(1) || Q == t)
        throw Error(ErrorKind::NormalFormDegenerate, "Q = " + Q.str() + " is a pole");
    check_kappa(kappa);

    const Rat k0 = kappa.kappa0();
    const Rat h(1, 2);
    const Rat t1 = t - 1;
    const Rat tt = t * t1;
    const Rat u = t * (Q - 1) / (Q - t);
    const Mat2 n1{0, 1, 0, 0};
    const Mat2 n2{1, 1, -1, -1};
    const Mat2 n3{u, 1, -u * u, -u};

    FourPoleConnection c;
    c.t = t;
    c.A1 = (k0 * (Q - t) / t - p * Q * (Q - t) / t) * n1 + (kappa.k[0] * h) * Mat2{1, 0, 0, -1};
    c.A2 = (-k0 * (Q - t) / t1 + p * (Q - 1) * (Q - t) / t1) * n2 + (kappa.k[1] * h) * Mat2{1, 0, -2, -1};
    c.A3 = (k0 * (Q - t) / tt - p * (Q - t) * (Q - t) / tt) * n3 + (kappa.k[2] * h) * Mat2{1, 0, -2 * u, -1};
    c.C = {0, 0, 0, 0};
    c.A4 = c.infinity_residue_from_chart();
    return c;
}

ProjRat apparent_point(const FourPoleConnection& c) {
    Poly n = c.cleared_entry(1, 2);
    if (n.is_zero()) throw Error(ErrorKind::DegenerateInput, "(1,2) entry vanishes identically");
    if (n.degree() > 1) throw Error(ErrorKind::DegenerateInput, "(1,2) entry is not of normal-form degree");
    if (n.degree() == 0) return ProjRat::inf();
    return ProjRat(-n.coeff(0) / n.coeff(1));
}

Rat p_invariant(const FourPoleConnection& c, const KappaParams& kappa, const Rat& q) {
    const Rat h(1, 2);
    return c.eval(q).a22 + kappa.k[0] * h / q + kappa.k[1] * h / (q - 1) + kappa.k[2] * h / (q - c.t);
}

std::array<PoleEigen, 4> eigen_table(const FourPoleConnection& c, const PQState& s) {
    (void)c;
    const Rat& q = s.q.value();
    const Rat& t = s.t;
    const Rat pt = s.p_tilde();
    const Rat h(1, 2);
    const Rat k0 = s.kappa.kappa0();
    const auto& k = s.kappa.k;
    std::array<PoleEigen, 4> e;
    e[0] = {k[0] * h, {1, -pt / q}, -k[0] * h, {1, -(pt - t * k[0]) / q}};
    e[1] = {k[1] * h, {1, -pt / (q - 1)}, -k[1] * h, {1, -(pt + (t - 1) * k[1]) / (q - 1)}};
    e[2] = {k[2] * h, {1, -pt / (q - t)}, -k[2] * h, {1, -(pt - t * (t - 1) * k[2]) / (q - t)}};
    e[3] = {(k[3] - 1) * h, {1, k0}, -(k[3] + 1) * h, {1, k0 + k[3]}};
    return e;
}

const char* sheet_name(Sheet s) {
    switch (s) {
    case Sheet::Generic: return "generic";
    case Sheet::Plus: return "plus";
    case Sheet::Minus: return "minus";
    }
    return "generic";
}

std::array<ProjRat, 4> standard_poles(const Rat& t) { return {ProjRat(0), ProjRat(1), ProjRat(t), ProjRat::inf()}; }

PPoint apparent_singularity(const PQState& s, const std::array<bool, 4>& fiber_in_parabolic) {
    auto poles = standard_poles(s.t);
    for (int i = 0; i < 4; ++i)
        if (poles[i] == s.q) return {s.q, fiber_in_parabolic[i] ? Sheet::Minus : Sheet::Plus};
    return {s.q, Sheet::Generic};
}

}  // namespace pvi
