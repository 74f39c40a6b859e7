#include "pvi/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pvi/backlund.hpp"
#include "pvi/higgs.hpp"
#include "pvi/lattice.hpp"
#include "pvi/mconv.hpp"
#include "pvi/sampling.hpp"
#include "pvi/stability.hpp"

namespace pvi {

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json Report::to_json() const {
    json cs = json::array();
    for (const auto& c : checks) {
        json j = {{"name", c.name},      {"anchor", c.anchor}, {"criterion", c.criterion},
                  {"supplementary", c.supplementary}, {"pass", c.pass},     {"evaluated", c.evaluated}};
        if (!c.pass) j["witness"] = c.witness;
        cs.push_back(j);
    }
    return {{"suite", suite}, {"seed", seed},   {"samples", samples},      {"bound", bound},
            {"rejections", rejections}, {"pass", all_pass()}, {"checks", cs}, {"info", info}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"connection", "backlund", "lattice", "zones", "higgs", "mc"};
    return names;
}

namespace {

using WitnessFn = std::function<json()>;

class Suite {
public:
    explicit Suite(Report& r) : r_(r) {}

    // Declares a check; later records refer to it by index so the report keeps declaration order.
    int declare(const std::string& name, const std::string& anchor, int criterion, bool supplementary = false) {
        Check c;
        c.name = name;
        c.anchor = anchor;
        c.criterion = criterion;
        c.supplementary = supplementary;
        r_.checks.push_back(c);
        return static_cast<int>(r_.checks.size()) - 1;
    }

    void record(int id, bool ok, const WitnessFn& witness) {
        Check& c = r_.checks[id];
        ++c.evaluated;
        if (!ok && c.pass) {
            c.pass = false;
            c.witness = witness();
        }
    }

    // A domain error inside a sample counts as a failure of that check.
    void guarded(int id, const std::function<bool(json&)>& body) {
        json w;
        bool ok = false;
        try {
            ok = body(w);
        } catch (const Error& e) {
            w["error"] = e.what();
        }
        record(id, ok, [&] { return w; });
    }

    Report& report() { return r_; }

private:
    Report& r_;
};

json rats(const std::array<Rat, 4>& a) {
    json out = json::array();
    for (const auto& x : a) out.push_back(to_json(x));
    return out;
}

const Rat kHalf(1, 2);

// ---------------------------------------------------------------- connection

void connection_suite(Suite& su, Sampler& sm, int samples) {
    const std::string nf = "normal form residues";
    const int det = su.declare("det A_i = -kappa_i^2/4 (i<=3)", nf, 1);
    const int tr = su.declare("trace A_i = 0 (i<=3)", nf, 1);
    const int a4 = su.declare("A4 = diag((1-kappa4)/2, (kappa4-1)/2)", nf, 1);
    const int sum = su.declare("A1+A2+A3+A4 = 0", nf, 1);
    const int a22 = su.declare("A(2,2) at x=q equals p", nf, 1);
    const int a12 = su.declare("(1,2) entry vanishes exactly at x=q", nf, 1);
    const int pinv = su.declare("A(2,2)(q) + sum kappa_i/(2(q-t_i)) = p", nf, 1, true);
    const int chart = su.declare("A4 equals the residue at infinity from the chart change", nf, 1, true);
    const int spec4 = su.declare("A4 has eigenvalues (kappa4-1)/2 and -(kappa4+1)/2", nf, 1, true);
    const std::string ev = "eigenvector table";
    const int eig = su.declare("A_i v = r v for all eight eigenpairs", ev, 2);
    const int gap = su.declare("eigenvalue gaps equal kappa_i (i<=3) and kappa4", ev, 2);
    const int eigx = su.declare("exact 2x2 eigensolver agrees with the table", ev, 2, true);
    const std::string fib = "fibration identity";
    const int qmap = su.declare("Q_map(parabolic_from_connection(s)) = q + kappa0/p", fib, 3);
    const int qs0 = su.declare("Q = q o s0", fib, 3);
    const int s0q = su.declare("q = Q o s0", fib, 3);
    const int conic = su.declare("conic Q map agrees with the closed form", fib, 3, true);

    for (int n = 0; n < samples; ++n) {
        const PQState s = sample_state(sm);
        const FourPoleConnection c = build_connection(s);
        const Rat& q = s.q.value();
        const auto& k = s.kappa.k;
        const json in = to_json(s);
        auto mat_w = [&](const char* what, const Mat2& got, const Mat2& want) {
            return json{{"input", in}, {"matrix", what}, {"lhs", to_json(got)}, {"rhs", to_json(want)}};
        };

        for (int i = 1; i <= 3; ++i) {
            const Mat2& A = c.residue(i);
            const Rat want = -k[i - 1] * k[i - 1] / Rat(4);
            su.record(det, A.det() == want, [&] {
                return json{{"input", in}, {"pole", i}, {"lhs", to_json(A.det())}, {"rhs", to_json(want)}};
            });
            su.record(tr, A.trace().is_zero(), [&] { return json{{"input", in}, {"pole", i}, {"lhs", to_json(A.trace())}}; });
        }
        const Mat2 a4_want{(Rat(1) - k[3]) / Rat(2), 0, 0, (k[3] - Rat(1)) / Rat(2)};
        su.record(a4, c.A4 == a4_want, [&] { return mat_w("A4", c.A4, a4_want); });
        const Mat2 total = c.A1 + c.A2 + c.A3 + c.A4;
        su.record(sum, total.is_zero(), [&] { return mat_w("A1+A2+A3+A4", total, Mat2{}); });
        const Rat at_q = c.eval(q).a22;
        su.record(a22, at_q == s.p, [&] { return json{{"input", in}, {"lhs", to_json(at_q)}, {"rhs", to_json(s.p)}}; });
        const Poly n12 = c.cleared_entry(1, 2);
        const ProjRat ap = apparent_point(c);
        su.record(a12, n12.degree() == 1 && ap == s.q,
                  [&] { return json{{"input", in}, {"zero", to_json(ap)}, {"degree", n12.degree()}}; });
        const Rat pi = p_invariant(c, s.kappa, q);
        su.record(pinv, pi == s.p, [&] { return json{{"input", in}, {"lhs", to_json(pi)}, {"rhs", to_json(s.p)}}; });
        su.guarded(chart, [&](json& w) {
            const Mat2 inf = c.infinity_residue_from_chart();
            w = mat_w("A4 vs chart", c.A4, inf);
            return inf == c.A4;
        });
        {
            const Rat r1 = (k[3] - 1) / Rat(2), r2 = -(k[3] + 1) / Rat(2);
            const bool ok = c.A4.trace() == r1 + r2 && c.A4.det() == r1 * r2;
            su.record(spec4, ok, [&] { return json{{"input", in}, {"A4", to_json(c.A4)}}; });
        }

        const auto table = eigen_table(c, s);
        for (int i = 0; i < 4; ++i) {
            const Mat2& A = c.residue(i + 1);
            const auto& e = table[i];
            for (int sgn = 0; sgn < 2; ++sgn) {
                const Rat& r = sgn ? e.r_plus : e.r_minus;
                const Vec2& v = sgn ? e.v_plus : e.v_minus;
                const Vec2 av = A * v;
                const bool ok = av[0] == r * v[0] && av[1] == r * v[1] && !(v[0].is_zero() && v[1].is_zero());
                su.record(eig, ok, [&] {
                    return json{{"input", in}, {"pole", i + 1}, {"eigenvalue", to_json(r)},
                                {"Av", json::array({to_json(av[0]), to_json(av[1])})},
                                {"rv", json::array({to_json(r * v[0]), to_json(r * v[1])})}};
                });
            }
            const Rat g = e.r_minus - e.r_plus;
            su.record(gap, g == k[i], [&] { return json{{"input", in}, {"pole", i + 1}, {"gap", to_json(g)}, {"kappa", to_json(k[i])}}; });
            su.guarded(eigx, [&](json& w) {
                auto pairs = eig2(A);
                w = {{"input", in}, {"pole", i + 1}};
                return pairs.size() == 2 && std::max(e.r_minus, e.r_plus) == pairs[0].value &&
                       std::min(e.r_minus, e.r_plus) == pairs[1].value;
            });
        }

        const ProjRat Q = Q_of(s);
        su.guarded(qmap, [&](json& w) {
            const ProjRat got = q_map_parabolic(parabolic_from_connection(s));
            w = {{"input", in}, {"lhs", to_json(got)}, {"rhs", to_json(Q)}};
            return got == Q;
        });
        su.guarded(qs0, [&](json& w) {
            const ProjRat got = q_of(apply_generator(Gen::s0, s));
            w = {{"input", in}, {"lhs", to_json(Q)}, {"rhs", to_json(got)}};
            return got == Q;
        });
        su.guarded(s0q, [&](json& w) {
            const ProjRat got = Q_of(apply_generator(Gen::s0, s));
            w = {{"input", in}, {"lhs", to_json(s.q)}, {"rhs", to_json(got)}};
            return got == s.q;
        });
        su.guarded(conic, [&](json& w) {
            const QuasiPar qp = parabolic_from_connection(s);
            const ProjRat a = q_map_conic(qp), b = q_map_parabolic(qp);
            w = {{"input", in}, {"conic", to_json(a)}, {"closed_form", to_json(b)}};
            return a == b;
        });
    }
}

// ---------------------------------------------------------------- backlund, transversality, symplectic

bool closed_forms_defined(const SymState& s) {
    try {
        apply_word(kappa_shift_word(), s);
        apply_word(kappa_shift_word_relabeled(), s);
        apply_word(schlesinger_word(), s);
        apply_word(schlesinger_word_relabeled(), s);
        schlesinger_composite_qp(s);
        Qprime_of(s);
        apply_word({Gen::s1, Gen::s2, Gen::s3, Gen::s4}, s);
        BacklundWord rev = kappa_shift_word();
        std::reverse(rev.begin(), rev.end());
        apply_word(rev, s);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateInput) return false;
        throw;
    }
    return true;
}

json kappa_json(const KappaParams& k) { return rats(k.k); }

void backlund_suite(Suite& su, Sampler& sm, int samples) {
    const std::string grp = "Backlund group relations";
    std::map<std::string, int> rel_ids;
    const SymState fixed{Rat(2), KappaParams(Rat(1, 8), Rat(1, 8), Rat(1, 8), Rat(1, 8)), ProjRat(3), Rat(5)};
    for (const auto& r : check_relations(fixed)) rel_ids[r.name] = su.declare(r.name, grp, 4);
    const int shift = su.declare("r12_34 s3 s4 s0 s1 s2 s0 shifts kappa by (+1,+1,0,0)", grp, 4);
    const int closed = su.declare("closed form (q',p') equals r12_34 s0 s1 s2 s0", grp, 4);
    const int shift2 = su.declare("r12_34 s1 s2 s0 s3 s4 s0 shifts kappa by (+1,+1,0,0)", grp, 4, true);
    const int closed2 = su.declare("closed form (q',p') equals r12_34 s0 s3 s4 s0", grp, 4, true);
    const int s0inv = su.declare("s0 is an involution on (kappa,q,p)", grp, 4, true);
    const int qprime = su.declare("Q' closed form equals Q after s1 s2 s3 s4", grp, 4, true);
    const int swap = su.declare("s0 acts on the (x,y) chart as (x,y) -> (y,x)", grp, 4, true);
    const std::string tv = "transversality of the two fibrations";
    const int one = su.declare("q=lambda1, Q=lambda2 has exactly one solution", tv, 5);
    const int none = su.declare("lambda1 = lambda2 has no finite solution", tv, 5);
    const std::string sp = "symplectic form in the (x,y) chart";
    const int symp = su.declare("kappa0 det(d(x,y)/d(q,p)) / (x-y)^2 = -1", sp, 6);

    int done = 0;
    while (done < samples) {
        const PQState s = sample_state(sm);
        if (!relations_defined(s) || !closed_forms_defined(s)) {
            sm.reject();
            continue;
        }
        ++done;
        const json in = to_json(s);
        for (const auto& r : check_relations(s))
            su.record(rel_ids[r.name], r.holds, [&] { return json{{"input", in}, {"detail", r.witness}}; });

        const auto& k = s.kappa.k;
        const KappaParams want{k[0] + 1, k[1] + 1, k[2], k[3]};
        {
            const SymState ltr = apply_word(kappa_shift_word(), s);
            BacklundWord rev = kappa_shift_word();
            std::reverse(rev.begin(), rev.end());
            const SymState rtl = apply_word(rev, s);
            su.record(shift, ltr.kappa == want, [&] {
                return json{{"input", in}, {"expected", kappa_json(want)}, {"left_to_right", kappa_json(ltr.kappa)},
                            {"right_to_left", kappa_json(rtl.kappa)}};
            });
            const SymState rel = apply_word(kappa_shift_word_relabeled(), s);
            su.record(shift2, rel.kappa == want,
                      [&] { return json{{"input", in}, {"expected", kappa_json(want)}, {"got", kappa_json(rel.kappa)}}; });
        }
        {
            const SymState cf = schlesinger_composite_qp(s);
            const SymState wd = apply_word(schlesinger_word(), s);
            su.record(closed, cf == wd, [&] { return json{{"input", in}, {"closed_form", to_json(cf)}, {"word", to_json(wd)}}; });
            const SymState wd2 = apply_word(schlesinger_word_relabeled(), s);
            su.record(closed2, cf == wd2, [&] { return json{{"input", in}, {"closed_form", to_json(cf)}, {"word", to_json(wd2)}}; });
        }
        {
            const SymState back = apply_word({Gen::s0, Gen::s0}, s);
            su.record(s0inv, back == s, [&] { return json{{"input", in}, {"s0s0", to_json(back)}}; });
            const ProjRat a = Qprime_of(s);
            const ProjRat b = Q_of(apply_word({Gen::s1, Gen::s2, Gen::s3, Gen::s4}, s));
            su.record(qprime, a == b, [&] { return json{{"input", in}, {"closed_form", to_json(a)}, {"word", to_json(b)}}; });
            const auto xy = al_chart(s);
            const auto yx = al_chart(apply_generator(Gen::s0, s));
            su.record(swap, xy.first == yx.second && xy.second == yx.first, [&] {
                return json{{"input", in}, {"xy", json::array({to_json(xy.first), to_json(xy.second)})},
                            {"s0_xy", json::array({to_json(yx.first), to_json(yx.second)})}};
            });
        }
        su.guarded(symp, [&](json& w) {
            const SymplecticData d = symplectic_data(s);
            w = {{"input", in}, {"jacobian", to_json(d.jacobian)}, {"factor", to_json(d.factor)}, {"product", to_json(d.product)}};
            return d.product == Rat(-1);
        });
    }

    // independent count: unknowns (q, w = 1/p) in q = lambda1, q + kappa0 w = lambda2
    done = 0;
    while (done < samples) {
        const Rat l1 = sm.rat(), l2 = sm.rat(), k0 = sm.rat();
        if (l1 == l2 || k0.is_zero()) {
            sm.reject();
            continue;
        }
        ++done;
        const json in = {{"lambda1", to_json(l1)}, {"lambda2", to_json(l2)}, {"kappa0", to_json(k0)}};
        su.guarded(one, [&](json& w) {
            const auto lin = solve_linear({{Rat(1), Rat(0)}, {Rat(1), k0}}, {l1, l2});
            const auto [q, p] = transversality_solve(l1, l2, k0);
            const Rat& wv = lin.particular[1];
            w = {{"input", in}, {"q", to_json(q)}, {"p", to_json(p)}, {"rank", lin.rank}};
            const bool unique = lin.nullspace.empty() && !wv.is_zero();
            SymState st{Rat(2), KappaParams(Rat(1) - Rat(2) * k0, 0, 0, 0), ProjRat(q), p};
            return unique && q == lin.particular[0] && p == wv.inv() && q_of(st) == ProjRat(l1) && Q_of(st) == ProjRat(l2);
        });
        su.guarded(none, [&](json& w) {
            const auto lin = solve_linear({{Rat(1), Rat(0)}, {Rat(1), k0}}, {l1, l1});
            w = {{"input", in}, {"w", to_json(lin.particular[1])}};
            if (!lin.particular[1].is_zero()) return false;
            try {
                transversality_solve(l1, l1, k0);
            } catch (const Error& e) {
                return e.kind() == ErrorKind::NoFiniteIntersection;
            }
            return false;
        });
    }
}

// ---------------------------------------------------------------- lattice

void lattice_suite(Suite& su) {
    const std::string en = "transversal A1-fibrations";
    const int count = su.declare("exactly 16 classes with 0<=n<=5", en, 7);
    const int shape = su.declare("every class is C1+F-sum E_i^{sigma_i}", en, 7);
    const int nums = su.declare("L^2=0, L.F=1, L.Y_red=1", en, 7);
    const int signs = su.declare("all 16 sign patterns occur", en, 7);
    const std::string fb = "singular fibers";
    const std::string an = "anticanonical divisor";
    const int excl = su.declare("C1+F has L.Y_red = 5", en, 7, true);
    const int sig = su.declare("Gram matrix has signature (1,9)", "intersection form", 7, true);

    const auto classes = enumerate_transversal(5);
    su.record(count, classes.size() == 16, [&] { return json{{"found", classes.size()}}; });
    std::set<std::string> labels;
    for (const auto& c : classes) {
        labels.insert(c.label());
        su.record(shape, c.cls == DivClass::L_sigma(c.sigma) && c.n == 1, [&] { return to_json(c); });
        const long l2 = intersect(c.cls, c.cls), lf = intersect(c.cls, DivClass::F()), ly = intersect(c.cls, DivClass::Yred());
        su.record(nums, l2 == 0 && lf == 1 && ly == 1,
                  [&] { return json{{"class", to_json(c)}, {"L^2", l2}, {"L.F", lf}, {"L.Y_red", ly}}; });
    }
    su.record(signs, labels.size() == 16, [&] { return json{{"distinct", labels.size()}}; });
    for (const auto& chk : singular_fiber_decompositions()) {
        const int id = su.declare(chk.name, fb, 7);
        su.record(id, chk.holds, [&] { return json{{"detail", chk.witness}}; });
    }
    for (const auto& chk : anticanonical_checks()) {
        const int id = su.declare(chk.name, an, 7);
        su.record(id, chk.holds, [&] { return json{{"detail", chk.witness}}; });
    }
    const long v = intersect(DivClass::C1() + DivClass::F(), DivClass::Yred());
    su.record(excl, v == 5, [&] { return json{{"value", v}}; });
    const auto s = gram_signature();
    su.record(sig, s[0] == 1 && s[1] == 9, [&] { return json{{"positive", s[0]}, {"negative", s[1]}}; });

    json list = json::array();
    for (const auto& c : classes) list.push_back(to_json(c));
    su.report().info["classes_found"] = classes.size();
    su.report().info["message"] = std::to_string(classes.size()) + " classes found";
    su.report().info["classes"] = list;
}

// ---------------------------------------------------------------- zones

bool predicted_type(const ZoneLabel& z, const Subbundle& l) {
    switch (z.kind) {
    case ZoneKind::A: return l.degree == 1;
    case ZoneKind::B: return l.degree == -1 && l.contact == std::array<bool, 4>{true, true, true, true};
    case ZoneKind::C: return l.degree == 0 && l.contact[z.i] && l.contact[z.j];
    case ZoneKind::Stable: return false;
    }
    return false;
}

void zones_suite(Suite& su, Sampler& sm, int samples) {
    const std::string zn = "weight zones";
    const int part = su.declare("classify_zone picks exactly one of 9 labels", zn, 8);
    const int orbit = su.declare("et_pair orbit of zone A reaches all 8 unstable labels", zn, 8);
    std::vector<int> type_ids;
    for (const auto& z : ZoneLabel::unstable_labels())
        type_ids.push_back(su.declare("find_destabilizer type in zone " + z.str(), zn, 8));
    const int oracle = su.declare("find_destabilizer verdict matches brute-force enumeration", zn, 8);
    const int branch = su.declare("stable-zone branch at U_i=inf matches find_destabilizer", zn, 8, true);

    std::map<std::string, long> counts;
    for (int n = 0; n < 20 * samples; ++n) {
        const auto e = sample_eps(sm);
        // raw predicates, evaluated here without classify_zone
        const Rat total = e[0] + e[1] + e[2] + e[3];
        std::vector<std::string> hits;
        if (total < kHalf) hits.push_back("A");
        if (total > Rat(3, 2)) hits.push_back("B");
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (Rat(2) * (e[a] + e[b]) - total > kHalf) hits.push_back("C" + std::to_string(a + 1) + std::to_string(b + 1));
        su.guarded(part, [&](json& w) {
            const ZoneLabel z = classify_zone(e);
            w = {{"eps", rats(e)}, {"label", z.str()}, {"predicates", hits}};
            ++counts[z.str()];
            return hits.size() <= 1 && z.str() == (hits.empty() ? std::string("stable") : hits[0]);
        });
    }
    su.report().info["zone_counts"] = counts;

    for (int n = 0; n < samples; ++n) {
        const auto e = sample_eps_in_zone(sm, {ZoneKind::A});
        std::set<std::string> seen;
        std::vector<Weights> frontier{Weights::from_eps(e)};
        std::set<std::vector<std::string>> visited;
        while (!frontier.empty()) {
            Weights w = frontier.back();
            frontier.pop_back();
            std::vector<std::string> key;
            for (auto& x : w.eps) key.push_back(x.str());
            if (!visited.insert(key).second) continue;
            seen.insert(classify_zone(w).str());
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) frontier.push_back(et_pair(w, a, b));
        }
        bool all = true;
        for (const auto& z : ZoneLabel::unstable_labels()) all = all && seen.count(z.str());
        su.record(orbit, all, [&] { return json{{"eps", rats(e)}, {"reached", seen}}; });
    }

    const auto labels = ZoneLabel::unstable_labels();
    for (std::size_t zi = 0; zi < labels.size(); ++zi) {
        for (int n = 0; n < samples; ++n) {
            const Weights w = Weights::from_eps(sample_eps_in_zone(sm, labels[zi]));
            const QuasiPar qp = sample_simple_qp(sm, sample_t(sm));
            su.guarded(type_ids[zi], [&](json& wit) {
                auto l = find_destabilizer(qp, w);
                wit = {{"eps", rats(w.eps)}, {"qp", to_json(qp)}, {"destabilizer", l ? to_json(*l) : json(nullptr)}};
                return l && predicted_type(labels[zi], *l);
            });
        }
    }

    std::vector<ZoneLabel> all_labels = labels;
    all_labels.push_back({ZoneKind::Stable});
    for (const auto& z : all_labels)
        for (int n = 0; n < samples; ++n) {
            const Weights w = Weights::from_eps(sample_eps_in_zone(sm, z));
            const QuasiPar qp = sample_simple_qp(sm, sample_t(sm), 1);
            su.guarded(oracle, [&](json& wit) {
                const Rat best = brute_force_max_excess(qp, w.eps);
                auto l = find_destabilizer(qp, w);
                wit = {{"eps", rats(w.eps)}, {"qp", to_json(qp)}, {"oracle_max", to_json(best)},
                       {"destabilizer", l ? to_json(*l) : json(nullptr)}};
                if (best > kHalf) return l.has_value() && stability_excess(*l, w.eps) == best;
                return !l.has_value();
            });
        }

    for (int n = 0; n < samples; ++n) {
        const Weights w = Weights::from_eps(sample_eps_in_zone(sm, {ZoneKind::Stable}));
        const Rat t = sample_t(sm);
        const int i = static_cast<int>(sm.integer(0, 3));
        QuasiPar qp = sample_simple_qp(sm, t);
        qp.u[i] = ProjRat::inf();
        if (!is_simple(qp)) {
            sm.reject();
            continue;
        }
        su.guarded(branch, [&](json& wit) {
            const Branch b = stable_subzone_branch(w, i);
            auto l = find_destabilizer(qp, w);
            wit = {{"eps", rats(w.eps)}, {"qp", to_json(qp)}, {"branch", branch_name(b)},
                   {"destabilizer", l ? to_json(*l) : json(nullptr)}};
            if (b == Branch::OriginUnstable) return l && l->degree == 1 && l->contact_list() == std::vector<int>{i};
            return !l.has_value();
        });
    }
}

// ---------------------------------------------------------------- higgs

PQState with_qp(const Rat& t, const KappaParams& k, const Rat& q, const Rat& p) { return {t, k, ProjRat(q), p}; }

bool off_poles(const Rat& q, const Rat& t) { return !q.is_zero() && q != Rat(1) && q != t; }

void higgs_suite(Suite& su, Sampler& sm, int samples) {
    const std::string hg = "Higgs limits";
    const int za = su.declare("zone A: limit divisor equals the apparent singularity", hg, 9);
    const int st = su.declare("stable zone: states with the same Phi-image have the same limit", hg, 9);
    const int un = su.declare("no ThetaZero limit in an unstable zone", hg, 9);
    const int va = su.declare("stable zone: limit equals V_alpha of the Phi-image", hg, 9, true);
    const int quot = su.declare("E/L does not destabilize the graded limit", hg, 9, true);

    for (int n = 0; n < samples; ++n) {
        const Weights w = Weights::from_eps(sample_eps_in_zone(sm, {ZoneKind::A}));
        const PQState s = sample_state(sm);
        su.guarded(za, [&](json& wit) {
            const HiggsLimit h = higgs_limit(s, w);
            const QuasiPar qp = parabolic_from_connection(s);
            std::array<bool, 4> fiber{};
            for (int i = 0; i < 4; ++i) fiber[i] = qp.u[i].is_inf();
            const HiggsLimit v = v_alpha_unstable(apparent_singularity(s, fiber), s.t);
            wit = {{"input", to_json(s)}, {"eps", rats(w.eps)}, {"limit", to_json(h)}, {"v_alpha", to_json(v)}};
            return h == v && h.divisor == std::vector<ProjRat>{s.q};
        });
    }

    int done = 0;
    while (done < samples) {
        const Weights w = Weights::from_eps(sample_eps_in_zone(sm, {ZoneKind::Stable}));
        const Rat t = sample_t(sm);
        const KappaParams k = sample_generic_kappa(sm);
        const Rat k0 = k.kappa0();
        PQState s1, s2;
        if (done % 4 == 3) {
            // p = 0 puts Phi at (inf, plus) for every q
            const Rat q1 = sm.rat(), q2 = sm.rat();
            if (q1 == q2 || !off_poles(q1, t) || !off_poles(q2, t)) {
                sm.reject();
                continue;
            }
            s1 = with_qp(t, k, q1, 0);
            s2 = with_qp(t, k, q2, 0);
        } else {
            const Rat Q = sm.rat(), p1 = sm.rat_nonzero(), p2 = sm.rat_nonzero();
            const Rat q1 = Q - k0 / p1, q2 = Q - k0 / p2;
            if (p1 == p2 || !off_poles(Q, t) || !off_poles(q1, t) || !off_poles(q2, t)) {
                sm.reject();
                continue;
            }
            s1 = with_qp(t, k, q1, p1);
            s2 = with_qp(t, k, q2, p2);
        }
        ++done;
        su.guarded(st, [&](json& wit) {
            const HiggsLimit h1 = higgs_limit(s1, w), h2 = higgs_limit(s2, w);
            const PPoint f1 = phi_map(parabolic_from_connection(s1)), f2 = phi_map(parabolic_from_connection(s2));
            wit = {{"state1", to_json(s1)}, {"state2", to_json(s2)}, {"eps", rats(w.eps)}, {"phi1", to_json(f1)},
                   {"phi2", to_json(f2)}, {"limit1", to_json(h1)}, {"limit2", to_json(h2)}};
            return f1 == f2 && h1 == h2;
        });
        su.guarded(va, [&](json& wit) {
            const HiggsLimit h = higgs_limit(s1, w);
            const PPoint f = phi_map(parabolic_from_connection(s1));
            const HiggsLimit v = v_alpha_stable(f, t, w);
            wit = {{"input", to_json(s1)}, {"eps", rats(w.eps)}, {"phi", to_json(f)}, {"limit", to_json(h)}, {"v_alpha", to_json(v)}};
            return h == v;
        });
    }

    for (const auto& z : ZoneLabel::unstable_labels())
        for (int n = 0; n < samples; ++n) {
            const Weights w = Weights::from_eps(sample_eps_in_zone(sm, z));
            const PQState s = sample_state(sm);
            su.guarded(un, [&](json& wit) {
                const HiggsLimit h = higgs_limit(s, w);
                wit = {{"input", to_json(s)}, {"eps", rats(w.eps)}, {"limit", to_json(h)}};
                return h.kind == HiggsLimit::Kind::Graded;
            });
            su.guarded(quot, [&](json& wit) {
                auto l = find_destabilizer(parabolic_from_connection(s), w);
                wit = {{"input", to_json(s)}, {"eps", rats(w.eps)}};
                if (!l) return false;
                Subbundle q;
                q.degree = 1 - l->degree;
                for (int i = 0; i < 4; ++i) q.contact[i] = !l->contact[i];
                return stability_excess(q, w.eps) < kHalf;
            });
        }
}

// ---------------------------------------------------------------- mc

ExponentData sample_exponents(Sampler& sm, const std::array<Rat, 4>& eps) {
    std::array<Rat, 4> mu{sm.rat().frac(), sm.rat().frac(), sm.rat().frac(), 0};
    mu[3] = (Rat(-1, 2) - mu[0] - mu[1] - mu[2]).frac();
    return ExponentData::make(mu, eps);
}

void mc_suite(Suite& su, Sampler& sm, int samples) {
    const std::string mc = "middle convolution";
    const int sum = su.declare("sigma=++++: sum eps' = 1 - sum eps", mc, 10);
    const int stab = su.declare("sigma=++++: image in the stable zone", mc, 10);
    const int bad = su.declare("sigma=+++-: image stays unstable", mc, 10);
    const int search = su.declare("exhaustive sigma search reaches the stable zone from every unstable zone", mc, 10);
    const int ineq = su.declare("sigma=++++: 1/2 < sum eps' < 1 and |eps'_i+eps'_j-eps'_k-eps'_l| < 1/2", mc, 10, true);
    const int diff = su.declare("sigma=++++: eps'_1+eps'_2-eps'_3-eps'_4 = eps_1+eps_2-eps_3-eps_4", mc, 10, true);
    const int norm = su.declare("eps' in (0,1/2) and sum mu' = -1/2 mod 1 for every sigma", mc, 10, true);
    const int zind = su.declare("image weights do not depend on z", mc, 10, true);
    const int def = su.declare("defect(2, 4, 1,1,1,1) = 0", mc, 10, true);

    const std::array<int, 4> plus{1, 1, 1, 1}, badsig{1, 1, 1, -1};
    std::map<std::string, long> bad_zones;
    for (int n = 0; n < 4 * samples; ++n) {
        const ExponentData e = sample_exponents(sm, sample_eps_in_zone(sm, {ZoneKind::A}));
        const json in = to_json(e);
        const ExponentData out = mc_exponents(e, BetaChoice::canonical(plus, e));
        Rat se, so;
        for (int i = 0; i < 4; ++i) {
            se += e.eps[i];
            so += out.eps[i];
        }
        su.record(sum, so == Rat(1) - se, [&] { return json{{"input", in}, {"eps_out", rats(out.eps)}}; });
        su.guarded(stab, [&](json& w) {
            const ZoneLabel z = classify_zone(out.eps);
            w = {{"input", in}, {"eps_out", rats(out.eps)}, {"zone", z.str()}};
            return !z.unstable();
        });
        bool ok = kHalf < so && so < Rat(1);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) ok = ok && (Rat(2) * (out.eps[a] + out.eps[b]) - so).abs() < kHalf;
        su.record(ineq, ok, [&] { return json{{"input", in}, {"eps_out", rats(out.eps)}}; });
        const Rat d_in = e.eps[0] + e.eps[1] - e.eps[2] - e.eps[3];
        const Rat d_out = out.eps[0] + out.eps[1] - out.eps[2] - out.eps[3];
        su.record(diff, d_in == d_out, [&] { return json{{"input", in}, {"in", to_json(d_in)}, {"out", to_json(d_out)}}; });

        const ExponentData outb = mc_exponents(e, BetaChoice::canonical(badsig, e));
        su.guarded(bad, [&](json& w) {
            const ZoneLabel z = classify_zone(outb.eps);
            ++bad_zones[z.str()];
            w = {{"input", in}, {"eps_out", rats(outb.eps)}, {"zone", z.str()}};
            return z.unstable();
        });

        for (const auto& s : all_sigmas()) {
            BetaChoice b = BetaChoice::canonical(s, e);
            const ExponentData o = mc_exponents(e, b);
            Rat m;
            bool inside = true;
            for (int i = 0; i < 4; ++i) {
                m += o.mu[i];
                inside = inside && o.eps[i].sign() > 0 && o.eps[i] < kHalf;
            }
            su.record(norm, inside && (m + kHalf).is_integer(),
                      [&] { return json{{"input", in}, {"sigma", sigma_str(s)}, {"out", to_json(o)}}; });
            const Rat shift = sm.rat();
            b.z[0] += shift;
            b.z[3] -= shift;
            const ExponentData o2 = mc_exponents(e, b);
            su.record(zind, o2.eps == o.eps, [&] {
                return json{{"input", in}, {"sigma", sigma_str(s)}, {"eps_out", rats(o.eps)}, {"eps_out_shifted_z", rats(o2.eps)}};
            });
        }
    }
    su.report().info["sigma_+++-_zone_counts_from_A"] = bad_zones;

    json table = json::object();
    for (const auto& z : ZoneLabel::unstable_labels()) {
        json reach = json::object();
        for (int n = 0; n < samples; ++n) {
            const ExponentData e = sample_exponents(sm, sample_eps_in_zone(sm, z));
            su.guarded(search, [&](json& w) {
                const InterchangeReport r = zone_interchange_check(e);
                w = {{"input", to_json(e)}, {"zone", z.str()}};
                for (const auto& o : r.table) {
                    const std::string key = sigma_str(o.sigma);
                    if (!reach.contains(key)) reach[key] = 0;
                    if (o.zone && !o.zone->unstable()) reach[key] = reach[key].get<long>() + 1;
                }
                return r.first_stable.has_value();
            });
        }
        table[z.str()] = reach;
    }
    su.report().info["stable_image_counts_by_sigma"] = table;

    const long d = defect(2, 4, {1, 1, 1, 1});
    su.record(def, d == 0, [&] { return json{{"defect", d}}; });
}

void run_one(const std::string& name, Report& rep, std::uint64_t seed, int samples, long bound) {
    const auto& names = suite_names();
    const auto idx = static_cast<std::uint64_t>(std::find(names.begin(), names.end(), name) - names.begin());
    Sampler sm(seed * 0x9E3779B97F4A7C15ULL + idx, bound);
    Suite su(rep);
    if (name == "connection") connection_suite(su, sm, samples);
    else if (name == "backlund") backlund_suite(su, sm, samples);
    else if (name == "lattice") lattice_suite(su);
    else if (name == "zones") zones_suite(su, sm, samples);
    else if (name == "higgs") higgs_suite(su, sm, samples);
    else if (name == "mc") mc_suite(su, sm, samples);
    rep.rejections += sm.rejections();
}

}  // namespace

Rat brute_force_max_excess(const QuasiPar& qp, const std::array<Rat, 4>& eps) {
    std::optional<Rat> best;
    for (int d = -1; d <= 1; ++d) {
        const int nv = 1 - d, nw = 2 - d;  // coefficient counts of v in O(-d), w in O(1-d)
        for (int mask = 0; mask < 16; ++mask) {
            RatMatrix m;
            for (int k = 0; k < 4; ++k) {
                if (!(mask >> k & 1)) continue;
                std::vector<Rat> row(nv + nw);
                if (qp.t[k].is_inf()) {
                    if (qp.u[k].is_inf()) {
                        if (nv > 0) row[nv - 1] = 1;
                    } else {
                        if (nv > 0) row[nv - 1] = -qp.u[k].value();
                        row[nv + nw - 1] = 1;
                    }
                } else {
                    const Rat& x = qp.t[k].value();
                    Rat pw(1);
                    for (int a = 0; a < std::max(nv, nw); ++a, pw *= x) {
                        if (a < nv) row[a] = qp.u[k].is_inf() ? pw : -qp.u[k].value() * pw;
                        if (a < nw && !qp.u[k].is_inf()) row[nv + a] = pw;
                    }
                }
                m.push_back(row);
            }
            bool nonzero = true;
            if (!m.empty()) nonzero = !solve_linear(m, std::vector<Rat>(m.size())).nullspace.empty();
            if (!nonzero) continue;
            Rat s(d);
            for (int k = 0; k < 4; ++k) s += (mask >> k & 1) ? eps[k] : -eps[k];
            if (!best || s > *best) best = s;
        }
    }
    return *best;
}

Report run_suite(const std::string& suite, std::uint64_t seed, int samples, long bound) {
    Report rep;
    rep.suite = suite;
    rep.seed = seed;
    rep.samples = samples;
    rep.bound = bound;
    const auto& names = suite_names();
    if (suite == "all") {
        for (const auto& n : names) run_one(n, rep, seed, samples, bound);
    } else if (std::find(names.begin(), names.end(), suite) != names.end()) {
        run_one(suite, rep, seed, samples, bound);
    } else {
        throw Error(ErrorKind::ParseError, "unknown suite \"" + suite + "\"");
    }
    return rep;
}

}  // namespace pvi
