#include "pvi/backlund.hpp"

#include <sstream>

namespace pvi {

namespace {

constexpr std::array<std::pair<Gen, const char*>, 8> kNames{{{Gen::s0, "s0"},
                                                            {Gen::s1, "s1"},
                                                            {Gen::s2, "s2"},
                                                            {Gen::s3, "s3"},
                                                            {Gen::s4, "s4"},
                                                            {Gen::r12_34, "r12_34"},
                                                            {Gen::r13_24, "r13_24"},
                                                            {Gen::r14_23, "r14_23"}}};

Rat nonzero(const Rat& d, Gen g, const char* what) {
    if (d.is_zero()) throw Error(ErrorKind::DegenerateInput, std::string(gen_name(g)) + ": " + what + " = 0");
    return d;
}

const Rat& finite_q(const SymState& s, Gen g) {
    if (s.q.is_inf()) throw Error(ErrorKind::DegenerateInput, std::string(gen_name(g)) + ": q = inf");
    return s.q.value();
}

std::string state_str(const SymState& s) {
    std::ostringstream os;
    os << "(kappa=" << s.kappa.k[0] << "," << s.kappa.k[1] << "," << s.kappa.k[2] << "," << s.kappa.k[3] << "; q=" << s.q
       << "; p=" << s.p << ")";
    return os.str();
}

}  // namespace

const char* gen_name(Gen g) {
    for (auto& [k, n] : kNames)
        if (k == g) return n;
    return "?";
}

Gen parse_gen(std::string_view s) {
    for (auto& [k, n] : kNames)
        if (s == n) return k;
    throw Error(ErrorKind::ParseError, "unknown generator \"" + std::string(s) + "\"");
}

BacklundWord parse_word(std::string_view s) {
    BacklundWord w;
    while (!s.empty()) {
        auto cut = s.find(',');
        w.push_back(parse_gen(s.substr(0, cut)));
        if (cut == std::string_view::npos) break;
        s.remove_prefix(cut + 1);
    }
    return w;
}

std::string word_str(const BacklundWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::string(gen_name(w[i]));
    return out;
}

SymState apply_generator(Gen g, const SymState& s) {
    SymState o = s;
    const auto& k = s.kappa.k;
    const Rat k0 = s.kappa.kappa0();
    const Rat& t = s.t;
    switch (g) {
    case Gen::s0: {
        const Rat& q = finite_q(s, g);
        for (int i = 0; i < 4; ++i) o.kappa.k[i] = k[i] + k0;
        o.q = ProjRat(q + k0 / nonzero(s.p, g, "p"));
        break;
    }
    case Gen::s1:
    case Gen::s2:
    case Gen::s3: {
        const int i = g == Gen::s1 ? 0 : g == Gen::s2 ? 1 : 2;
        const Rat& q = finite_q(s, g);
        const std::array<Rat, 3> ti{Rat(0), Rat(1), t};
        const std::array<const char*, 3> what{"q", "q - 1", "q - t"};
        o.kappa.k[i] = -k[i];
        o.p = s.p - k[i] / nonzero(q - ti[i], g, what[i]);
        break;
    }
    case Gen::s4: o.kappa.k[3] = -k[3]; break;
    case Gen::r12_34: {
        const Rat& q = finite_q(s, g);
        const Rat qt = nonzero(q - t, g, "q - t");
        o.kappa.k = {k[1], k[0], k[3], k[2]};
        o.q = ProjRat(t * (q - 1) / qt);
        o.p = -qt * (qt * s.p + k0) / (t * (t - 1));
        break;
    }
    case Gen::r13_24: {
        const Rat& q = finite_q(s, g);
        const Rat q1 = nonzero(q - 1, g, "q - 1");
        o.kappa.k = {k[2], k[3], k[0], k[1]};
        o.q = ProjRat((q - t) / q1);
        o.p = q1 * (q1 * s.p + k0) / (t - 1);
        break;
    }
    case Gen::r14_23: {
        const Rat& q = finite_q(s, g);
        o.kappa.k = {k[3], k[2], k[1], k[0]};
        o.q = ProjRat(t / nonzero(q, g, "q"));
        o.p = -q * (q * s.p + k0) / t;
        break;
    }
    }
    return o;
}

SymState apply_word(const BacklundWord& w, const SymState& s) {
    SymState cur = s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        try {
            cur = apply_generator(w[i], cur);
        } catch (const Error& e) {
            throw Error(e.kind(), "step " + std::to_string(i) + " (" + gen_name(w[i]) + ") of " + word_str(w) + ": " + e.what());
        }
    }
    return cur;
}

BacklundWord kappa_shift_word() { return {Gen::r12_34, Gen::s3, Gen::s4, Gen::s0, Gen::s1, Gen::s2, Gen::s0}; }
BacklundWord kappa_shift_word_relabeled() { return {Gen::r12_34, Gen::s1, Gen::s2, Gen::s0, Gen::s3, Gen::s4, Gen::s0}; }
BacklundWord schlesinger_word() { return {Gen::r12_34, Gen::s0, Gen::s1, Gen::s2, Gen::s0}; }
BacklundWord schlesinger_word_relabeled() { return {Gen::r12_34, Gen::s0, Gen::s3, Gen::s4, Gen::s0}; }

namespace {

struct Relation {
    std::string name;
    BacklundWord lhs, rhs;
};

std::vector<Relation> relation_list() {
    const std::array<Gen, 5> s{Gen::s0, Gen::s1, Gen::s2, Gen::s3, Gen::s4};
    std::vector<Relation> out;
    for (int i = 0; i <= 4; ++i) out.push_back({"s" + std::to_string(i) + "^2=1", {s[i], s[i]}, {}});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            out.push_back({"s" + std::to_string(i) + "s" + std::to_string(j) + "=s" + std::to_string(j) + "s" + std::to_string(i),
                           {s[i], s[j]}, {s[j], s[i]}});
    for (int i = 1; i <= 4; ++i)
        out.push_back({"s0s" + std::to_string(i) + "s0=s" + std::to_string(i) + "s0s" + std::to_string(i),
                       {s[0], s[i], s[0]}, {s[i], s[0], s[i]}});
    // each r swaps poles in pairs; perm[i] is the image of pole i
    const std::array<std::pair<Gen, std::array<int, 4>>, 3> rs{{{Gen::r12_34, {2, 1, 4, 3}},
                                                               {Gen::r13_24, {3, 4, 1, 2}},
                                                               {Gen::r14_23, {4, 3, 2, 1}}}};
    for (auto& [r, perm] : rs) out.push_back({std::string(gen_name(r)) + "^2=1", {r, r}, {}});
    for (auto& [r, perm] : rs)
        for (int i = 1; i <= 4; ++i) {
            const int j = perm[i - 1];
            const std::string rn = gen_name(r);
            out.push_back({rn + "s" + std::to_string(i) + "=s" + std::to_string(j) + rn, {r, s[i]}, {s[j], r}});
        }
    return out;
}

}  // namespace

bool relations_defined(const SymState& s) {
    try {
        for (auto& rel : relation_list()) {
            apply_word(rel.lhs, s);
            apply_word(rel.rhs, s);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateInput) return false;
        throw;
    }
    return true;
}

std::vector<RelationResult> check_relations(const SymState& s) {
    std::vector<RelationResult> out;
    for (auto& rel : relation_list()) {
        RelationResult r;
        r.name = rel.name;
        try {
            SymState a = apply_word(rel.lhs, s);
            SymState b = apply_word(rel.rhs, s);
            r.holds = a == b;
            if (!r.holds) r.witness = "input " + state_str(s) + " lhs " + state_str(a) + " rhs " + state_str(b);
        } catch (const Error& e) {
            r.witness = std::string("input ") + state_str(s) + ": " + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

ProjRat q_of(const SymState& s) { return s.q; }

ProjRat Q_of(const SymState& s) {
    if (s.p.is_zero()) throw Error(ErrorKind::DegenerateInput, "Q needs p != 0");
    if (s.q.is_inf()) throw Error(ErrorKind::DegenerateInput, "Q needs a finite q");
    return ProjRat(s.q.value() + s.kappa.kappa0() / s.p);
}

ProjRat Qprime_of(const SymState& s) {
    if (s.q.is_inf()) throw Error(ErrorKind::DegenerateInput, "Q' needs a finite q");
    const Rat& q = s.q.value();
    const auto& k = s.kappa.k;
    if (q.is_zero() || q == Rat(1) || q == s.t) throw Error(ErrorKind::DegenerateInput, "Q' needs q off the poles");
    const Rat den = s.p - k[0] / q - k[1] / (q - 1) - k[2] / (q - s.t);
    if (den.is_zero()) throw Error(ErrorKind::DegenerateInput, "Q' denominator vanishes");
    return ProjRat(q + (Rat(1) - s.kappa.kappa0()) / den);
}

SymState schlesinger_composite_qp(const SymState& s) {
    if (s.q.is_inf()) throw Error(ErrorKind::DegenerateInput, "closed form needs a finite q");
    const Rat& q = s.q.value();
    const Rat& p = s.p;
    const Rat& t = s.t;
    const auto& k = s.kappa.k;
    const Rat k0 = s.kappa.kappa0();
    const Rat q1 = q - 1, qt = q - t;
    if (q1.is_zero() || qt.is_zero() || p.is_zero()) throw Error(ErrorKind::DegenerateInput, "closed form needs q != 1, t and p != 0");
    const Rat f1 = qt * p + k0 + k[3];
    const Rat f2 = qt * p + k0;
    if (f1.is_zero() || f2.is_zero()) throw Error(ErrorKind::DegenerateInput, "closed form denominator vanishes");
    const Rat bracket = p * p + ((Rat(1) - k[0] - k[1]) / q1 - k[2] / qt) * p + k0 * (k0 + k[3]) / (q1 * qt);
    SymState o = s;
    o.kappa.k = {Rat(1) - k[0], Rat(1) - k[1], k[2], k[3]};
    o.q = ProjRat(t * q1 * qt * bracket / (f1 * f2));
    o.p = -f1 * f2 / (t * (t - 1) * p);
    return o;
}

std::pair<Rat, Rat> al_chart(const SymState& s) {
    Rat y = Q_of(s).value();
    return {s.q.value(), y};
}

std::array<Rat, 4> blowup_slopes(const KappaParams& k) {
    const Rat k0 = k.kappa0();
    std::array<Rat, 4> out;
    for (int i = 0; i < 3; ++i) {
        if (k.k[i].is_zero()) throw Error(ErrorKind::DegenerateInput, "slope needs kappa_i != 0");
        out[i] = Rat(1) + k0 / k.k[i];
    }
    if ((k0 + k.k[3]).is_zero()) throw Error(ErrorKind::DegenerateInput, "slope needs kappa0 + kappa4 != 0");
    out[3] = k.k[3] / (k0 + k.k[3]);
    return out;
}

SymplecticData symplectic_data(const SymState& s) {
    const Rat k0 = s.kappa.kappa0();
    if (k0.is_zero()) throw Error(ErrorKind::DegenerateInput, "symplectic identity needs kappa0 != 0");
    if (s.p.is_zero() || s.q.is_inf()) throw Error(ErrorKind::DegenerateInput, "symplectic identity needs p != 0, q finite");
    auto xy = [&](const Dual& q, const Dual& p) { return std::pair<Dual, Dual>{q, q + Dual(k0) / p}; };
    auto [xq, yq] = xy(Dual::variable(s.q.value()), Dual(s.p));
    auto [xp, yp] = xy(Dual(s.q.value()), Dual::variable(s.p));
    SymplecticData d;
    d.jacobian = xq.d * yp.d - xp.d * yq.d;
    const Rat gap = xq.v - yq.v;
    d.factor = k0 / (gap * gap);
    d.product = d.factor * d.jacobian;
    return d;
}

bool symplectic_check(const SymState& s) { return symplectic_data(s).product == Rat(-1); }

std::pair<Rat, Rat> transversality_solve(const Rat& lambda1, const Rat& lambda2, const Rat& kappa0) {
    if (kappa0.is_zero()) throw Error(ErrorKind::DegenerateInput, "kappa0 = 0");
    if (lambda1 == lambda2) throw Error(ErrorKind::NoFiniteIntersection, "the fibers q = Q = " + lambda1.str() + " meet only at infinity");
    return {lambda1, kappa0 / (lambda2 - lambda1)};
}

}  // namespace pvi
