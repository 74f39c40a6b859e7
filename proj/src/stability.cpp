#include "pvi/stability.hpp"

#include <algorithm>

namespace pvi {

namespace {

const Rat kHalf(1, 2);

std::array<int, 2> complement(int i, int j) {
    std::array<int, 2> out{};
    int n = 0;
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j) out[n++] = k;
    return out;
}

}  // namespace

Weights Weights::make(const std::array<Rat, 4>& mu, const std::array<Rat, 4>& eps) {
    for (const auto& e : eps)
        if (e.sign() <= 0 || e >= kHalf)
            throw Error(ErrorKind::SpecialWeights, "eps = " + e.str() + " outside (0, 1/2)");
    return {mu, eps};
}

ZoneLabel ZoneLabel::C(int a, int b) {
    if (a > b) std::swap(a, b);
    return {ZoneKind::C, a, b};
}

std::vector<ZoneLabel> ZoneLabel::unstable_labels() {
    std::vector<ZoneLabel> out{{ZoneKind::A}, {ZoneKind::B}};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) out.push_back(C(a, b));
    return out;
}

std::string ZoneLabel::str() const {
    switch (kind) {
    case ZoneKind::A: return "A";
    case ZoneKind::B: return "B";
    case ZoneKind::C: return "C" + std::to_string(i + 1) + std::to_string(j + 1);
    case ZoneKind::Stable: return "stable";
    }
    return "stable";
}

ZoneLabel ZoneLabel::parse(const std::string& s) {
    if (s == "A") return {ZoneKind::A};
    if (s == "B") return {ZoneKind::B};
    if (s == "stable") return {ZoneKind::Stable};
    if (s.size() == 3 && s[0] == 'C') {
        int a = s[1] - '1', b = s[2] - '1';
        if (a >= 0 && b > a && b < 4) return C(a, b);
    }
    throw Error(ErrorKind::ParseError, "unknown zone label \"" + s + "\"");
}

bool eps_special(const std::array<Rat, 4>& eps) {
    for (int mask = 0; mask < 16; ++mask) {
        Rat s = kHalf;
        for (int i = 0; i < 4; ++i) s += (mask >> i & 1) ? -eps[i] : eps[i];
        if (s.is_integer()) return true;
    }
    return false;
}

ZoneLabel classify_zone(const std::array<Rat, 4>& eps) {
    const Rat total = eps[0] + eps[1] + eps[2] + eps[3];
    auto wall = [](const Rat& lhs, const Rat& bound, const std::string& what) {
        if (lhs == bound) throw Error(ErrorKind::SpecialWeights, what + " sits on its wall " + bound.str());
    };
    wall(total, kHalf, "sum eps");
    wall(total, Rat(3, 2), "sum eps");
    std::vector<ZoneLabel> hits;
    if (total < kHalf) hits.push_back({ZoneKind::A});
    if (total > Rat(3, 2)) hits.push_back({ZoneKind::B});
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            auto [k, l] = complement(a, b);
            Rat c = eps[a] + eps[b] - eps[k] - eps[l];
            wall(c, kHalf, "eps" + std::to_string(a + 1) + "+eps" + std::to_string(b + 1) + "-rest");
            if (c > kHalf) hits.push_back(ZoneLabel::C(a, b));
        }
    if (hits.size() > 1) throw Error(ErrorKind::SpecialWeights, "zone conditions overlap");
    return hits.empty() ? ZoneLabel{ZoneKind::Stable} : hits[0];
}

Weights et_pair(const Weights& w, int i, int j) {
    if (i == j || i < 0 || j < 0 || i > 3 || j > 3) throw Error(ErrorKind::DegenerateInput, "et_pair needs two distinct poles");
    Weights o = w;
    for (int k : {i, j}) {
        // new alpha^+ = old alpha^-, new alpha^- = old alpha^+ - 1
        Rat ap = w.alpha_minus(k), am = w.alpha_plus(k) - 1;
        o.mu[k] = (ap + am) / Rat(2);
        o.eps[k] = (ap - am) / Rat(2);
    }
    return o;
}

bool nonspecial_weights(const std::array<std::array<Rat, 2>, 4>& alpha, long d) {
    Rat shift(d);
    for (const auto& a : alpha) {
        if (!(a[1] < a[0] && a[0] < a[1] + 1)) return false;
        shift -= a[0] + a[1];
    }
    shift /= Rat(2);
    for (int mask = 0; mask < 16; ++mask) {
        Rat s = shift;
        for (int i = 0; i < 4; ++i) s += alpha[i][(mask >> i) & 1];
        if (s.is_integer()) return false;
    }
    return true;
}

std::vector<int> Subbundle::contact_list() const {
    std::vector<int> out;
    for (int i = 0; i < 4; ++i)
        if (contact[i]) out.push_back(i);
    return out;
}

Rat stability_excess(const Subbundle& l, const std::array<Rat, 4>& eps) {
    Rat s(l.degree);
    for (int i = 0; i < 4; ++i) s += l.contact[i] ? eps[i] : -eps[i];
    return s;
}

namespace {

Subbundle degree_zero(const QuasiPar& qp, const Linear& v) {
    Subbundle l;
    l.degree = 0;
    l.coefficients = {v.v0, v.v1};
    for (int k = 0; k < 4; ++k) l.contact[k] = passes_through(v, qp, k);
    return l;
}

void add_unique(std::vector<Subbundle>& out, Subbundle l) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
}

}  // namespace

std::vector<Subbundle> candidate_subbundles(const QuasiPar& qp) {
    std::vector<Subbundle> out;

    Subbundle top;
    top.degree = 1;
    for (int k = 0; k < 4; ++k) top.contact[k] = qp.u[k].is_inf();
    out.push_back(top);

    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (auto v = interpolant(qp, a, b)) add_unique(out, degree_zero(qp, *v));

    // (v, w) with v(t_k) P_k-compatible at every pole: four equations in (v0, v1, w0, w1, w2)
    RatMatrix m;
    for (int k = 0; k < 4; ++k) {
        const bool tinf = qp.t[k].is_inf();
        const Rat x = tinf ? Rat(0) : qp.t[k].value();
        if (qp.u[k].is_inf()) {
            m.push_back(tinf ? std::vector<Rat>{0, 1, 0, 0, 0} : std::vector<Rat>{1, x, 0, 0, 0});
        } else {
            const Rat& u = qp.u[k].value();
            m.push_back(tinf ? std::vector<Rat>{0, -u, 0, 0, 1} : std::vector<Rat>{-u, -u * x, 1, x, x * x});
        }
    }
    auto sol = solve_linear(m, std::vector<Rat>(4, Rat(0)));
    const auto& y = sol.nullspace.front();
    const Rat &v0 = y[0], &v1 = y[1], &w0 = y[2], &w1 = y[3], &w2 = y[4];
    if (v0.is_zero() && v1.is_zero()) return out;  // saturates to O(1), already listed
    Poly w({w0, w1, w2});
    if (!v1.is_zero()) {
        Rat z = -v0 / v1, rem;
        if (w(z).is_zero()) {
            Poly wq = w.divide_linear(z, &rem);
            add_unique(out, degree_zero(qp, Linear{wq.coeff(0) / v1, wq.coeff(1) / v1}));
            return out;
        }
    } else if (w2.is_zero()) {
        add_unique(out, degree_zero(qp, Linear{w0 / v0, w1 / v0}));
        return out;
    }
    Subbundle low;
    low.degree = -1;
    low.coefficients = y;
    for (int k = 0; k < 4; ++k) {
        const bool tinf = qp.t[k].is_inf();
        Rat vk = tinf ? v1 : v0 + v1 * qp.t[k].value();
        Rat wk = tinf ? w2 : w(qp.t[k].value());
        low.contact[k] = qp.u[k].is_inf() ? vk.is_zero() : wk == qp.u[k].value() * vk;
    }
    out.push_back(low);
    return out;
}

std::optional<Subbundle> find_destabilizer(const QuasiPar& qp, const Weights& w) {
    if (eps_special(w.eps)) throw Error(ErrorKind::SpecialWeights, "weights are special");
    std::optional<Subbundle> best;
    Rat best_score;
    for (auto& l : candidate_subbundles(qp)) {
        Rat s = stability_excess(l, w.eps);
        if (s == kHalf) throw Error(ErrorKind::SpecialWeights, "subbundle of parabolic slope exactly 1/2");
        if (s > kHalf && (!best || s > best_score)) {
            best = l;
            best_score = s;
        }
    }
    return best;
}

const char* branch_name(Branch b) { return b == Branch::OriginUnstable ? "origin_unstable" : "colinear_unstable"; }

Branch stable_subzone_branch(const Weights& w, int i) {
    if (classify_zone(w).kind != ZoneKind::Stable) throw Error(ErrorKind::DegenerateInput, "weights are not in the stable zone");
    Rat s = -w.eps[i];
    for (int k = 0; k < 4; ++k)
        if (k != i) s += w.eps[k];
    if (s == kHalf) throw Error(ErrorKind::SpecialWeights, "branch inequality is an equality");
    return s < kHalf ? Branch::OriginUnstable : Branch::ColinearUnstable;
}

}  // namespace pvi
