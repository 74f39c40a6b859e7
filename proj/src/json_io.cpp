#include "pvi/json_io.hpp"

namespace pvi {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <std::size_t N>
json array_of(const std::array<Rat, N>& a) {
    json out = json::array();
    for (const auto& x : a) out.push_back(to_json(x));
    return out;
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }
json to_json(const ProjRat& r) { return r.str(); }

json to_json(const Mat2& m) {
    return json::array({json::array({to_json(m.a11), to_json(m.a12)}), json::array({to_json(m.a21), to_json(m.a22)})});
}

json to_json(const PQState& s) {
    json k = json::array({to_json(s.kappa.kappa0())});
    for (const auto& x : s.kappa.k) k.push_back(to_json(x));
    return {{"t", to_json(s.t)}, {"kappa", k}, {"q", to_json(s.q)}, {"p", to_json(s.p)}};
}

json to_json(const FourPoleConnection& c) {
    return {{"t", to_json(c.t)}, {"A1", to_json(c.A1)}, {"A2", to_json(c.A2)}, {"A3", to_json(c.A3)},
            {"A4", to_json(c.A4)}, {"C", to_json(c.C)}};
}

json to_json(const QuasiPar& qp) {
    json t = json::array(), u = json::array();
    for (int i = 0; i < 4; ++i) {
        t.push_back(to_json(qp.t[i]));
        u.push_back(to_json(qp.u[i]));
    }
    return {{"t", t}, {"u", u}};
}

json to_json(const PPoint& p) { return {{"base", to_json(p.base)}, {"sheet", sheet_name(p.sheet)}}; }

json to_json(const Subbundle& l) {
    json c = json::array();
    for (int i : l.contact_list()) c.push_back(i + 1);
    json coeffs = json::array();
    for (const auto& x : l.coefficients) coeffs.push_back(to_json(x));
    return {{"degree", l.degree}, {"contact", c}, {"coefficients", coeffs}};
}

json to_json(const HiggsLimit& h) {
    if (h.kind == HiggsLimit::Kind::ThetaZero) return {{"kind", "theta_zero"}, {"t", to_json(h.qp)["t"]}, {"u", to_json(h.qp)["u"]}};
    json c = json::array();
    for (int i = 0; i < 4; ++i)
        if (h.contact[i]) c.push_back(i + 1);
    json d = json::array();
    for (const auto& x : h.divisor) d.push_back(to_json(x));
    return {{"kind", "graded"}, {"degL", h.deg_L}, {"contact", c}, {"divisor", d}};
}

json to_json(const TransversalClass& c) {
    return {{"label", c.label()}, {"n", c.n}, {"coefficients", c.cls.c}};
}

json to_json(const ExponentData& e) { return {{"mu", array_of(e.mu)}, {"eps", array_of(e.eps)}}; }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

ProjRat projrat_from_json(const json& j) {
    if (j.is_string()) return ProjRat::parse(j.get<std::string>());
    return ProjRat(rat_from_json(j));
}

std::array<Rat, 4> rat4_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::ParseError, "expected four rationals, got " + j.dump());
    return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]), rat_from_json(j[3])};
}

PQState state_from_json(const json& j) {
    PQState s;
    s.t = rat_from_json(field(j, "t"));
    const json& k = field(j, "kappa");
    if (!k.is_array()) throw Error(ErrorKind::ParseError, "kappa must be an array");
    if (k.size() == 5)
        s.kappa = KappaParams::with_kappa0(rat_from_json(k[0]), rat_from_json(k[1]), rat_from_json(k[2]), rat_from_json(k[3]),
                                           rat_from_json(k[4]));
    else if (k.size() == 4)
        s.kappa = KappaParams(rat_from_json(k[0]), rat_from_json(k[1]), rat_from_json(k[2]), rat_from_json(k[3]));
    else
        throw Error(ErrorKind::ParseError, "kappa needs 5 entries (kappa0..kappa4) or 4 (kappa1..kappa4)");
    s.q = projrat_from_json(field(j, "q"));
    s.p = rat_from_json(field(j, "p"));
    return s;
}

QuasiPar qp_from_json(const json& j) {
    QuasiPar qp;
    const json& t = field(j, "t");
    const json& u = field(j, "u");
    if (!t.is_array() || t.size() != 4 || !u.is_array() || u.size() != 4)
        throw Error(ErrorKind::ParseError, "t and u need four entries each");
    for (int i = 0; i < 4; ++i) {
        qp.t[i] = projrat_from_json(t[i]);
        qp.u[i] = projrat_from_json(u[i]);
    }
    return qp;
}

Weights weights_from_json(const json& j) {
    auto eps = rat4_from_json(field(j, "eps"));
    std::array<Rat, 4> mu{};
    if (j.contains("mu")) mu = rat4_from_json(j.at("mu"));
    return Weights::make(mu, eps);
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace pvi
