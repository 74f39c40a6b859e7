#include "pvi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pvi/backlund.hpp"
#include "pvi/higgs.hpp"
#include "pvi/json_io.hpp"
#include "pvi/lattice.hpp"
#include "pvi/mconv.hpp"
#include "pvi/verify.hpp"

namespace pvi {

namespace {

struct Options {
    std::string state, qp, eps, mu, sigma, word, poles, suite = "all", which;
    std::string lambda1, lambda2, kappa0;
    int pole = 1;
    long nmax = 5;
    std::uint64_t seed = 1;
    int samples = 50;
    long bound = 64;
    bool compact = false;
    bool alternative = false;
};

// Inline JSON, "-" for stdin, otherwise a path.
json load_json(const std::string& arg, const char* what) {
    if (arg.empty()) throw Error(ErrorKind::ParseError, std::string("--") + what + " is required");
    if (arg.front() == '{') return parse_json_text(arg);
    std::stringstream buf;
    if (arg == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(arg);
        if (!in) throw Error(ErrorKind::ParseError, "cannot read " + arg);
        buf << in.rdbuf();
    }
    return parse_json_text(buf.str());
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::array<Rat, 4> rat4(const std::string& s, const char* what) {
    auto parts = split(s);
    if (parts.size() != 4) throw Error(ErrorKind::ParseError, std::string("--") + what + " needs four comma-separated rationals");
    return {Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2]), Rat::parse(parts[3])};
}

Weights weights_of(const Options& o) {
    std::array<Rat, 4> mu{};
    if (!o.mu.empty()) mu = rat4(o.mu, "mu");
    return Weights::make(mu, rat4(o.eps, "eps"));
}

ExponentData exponents_of(const Options& o) {
    const auto eps = rat4(o.eps, "eps");
    return o.mu.empty() ? ExponentData::from_eps(eps) : ExponentData::make(rat4(o.mu, "mu"), eps);
}

int pole_index(int pole) {
    if (pole < 1 || pole > 4) throw Error(ErrorKind::ParseError, "poles are numbered 1..4");
    return pole - 1;
}

json zone_json(const Weights& w) {
    json mu = json::array(), eps = json::array();
    for (int i = 0; i < 4; ++i) {
        mu.push_back(to_json(w.mu[i]));
        eps.push_back(to_json(w.eps[i]));
    }
    return {{"mu", mu}, {"eps", eps}, {"zone", classify_zone(w).str()}};
}

struct Outcome {
    json body;
    bool pass = true;
};

// Per-state invariants of the normal form, every clause listed separately.
Outcome connection_build(const PQState& s) {
    const FourPoleConnection c = build_connection(s);
    const auto& k = s.kappa.k;
    const Rat& q = s.q.value();
    json checks = json::array();
    bool all = true;
    auto add = [&](const std::string& name, bool ok) {
        checks.push_back({{"name", name}, {"pass", ok}});
        all = all && ok;
    };
    bool det = true, tr = true;
    for (int i = 1; i <= 3; ++i) {
        det = det && c.residue(i).det() == -k[i - 1] * k[i - 1] / Rat(4);
        tr = tr && c.residue(i).trace().is_zero();
    }
    add("det A_i = -kappa_i^2/4 (i<=3)", det);
    add("trace A_i = 0 (i<=3)", tr);
    add("A4 = diag((1-kappa4)/2, (kappa4-1)/2)", c.A4 == Mat2{(Rat(1) - k[3]) / Rat(2), 0, 0, (k[3] - 1) / Rat(2)});
    add("A1+A2+A3+A4 = 0", (c.A1 + c.A2 + c.A3 + c.A4).is_zero());
    add("A(2,2) at x=q equals p", c.eval(q).a22 == s.p);
    add("(1,2) entry vanishes exactly at x=q", c.cleared_entry(1, 2).degree() == 1 && apparent_point(c) == s.q);
    add("A(2,2)(q) + sum kappa_i/(2(q-t_i)) = p", p_invariant(c, s.kappa, q) == s.p);
    add("A4 equals the residue at infinity from the chart change", c.infinity_residue_from_chart() == c.A4);
    bool eig = true;
    const auto table = eigen_table(c, s);
    for (int i = 0; i < 4; ++i) {
        const Mat2& A = c.residue(i + 1);
        const auto& e = table[i];
        const Vec2 vm = A * e.v_minus, vp = A * e.v_plus;
        eig = eig && vm[0] == e.r_minus * e.v_minus[0] && vm[1] == e.r_minus * e.v_minus[1] &&
              vp[0] == e.r_plus * e.v_plus[0] && vp[1] == e.r_plus * e.v_plus[1] && e.r_minus - e.r_plus == k[i];
    }
    add("eigenvector table and gaps", eig);
    return {{{"state", to_json(s)}, {"connection", to_json(c)}, {"checks", checks}, {"pass", all}}, all};
}

json eigen_json(const PQState& s) {
    const FourPoleConnection c = build_connection(s);
    json out = json::array();
    const auto table = eigen_table(c, s);
    for (int i = 0; i < 4; ++i) {
        const auto& e = table[i];
        out.push_back({{"pole", i + 1},
                       {"r_minus", to_json(e.r_minus)},
                       {"v_minus", json::array({to_json(e.v_minus[0]), to_json(e.v_minus[1])})},
                       {"r_plus", to_json(e.r_plus)},
                       {"v_plus", json::array({to_json(e.v_plus[0]), to_json(e.v_plus[1])})}});
    }
    return {{"state", to_json(s)}, {"eigen", out}};
}

QuasiPar qp_of(const Options& o) {
    if (!o.qp.empty()) return qp_from_json(load_json(o.qp, "qp"));
    return parabolic_from_connection(state_from_json(load_json(o.state, "state")));
}

json interchange_json(const InterchangeReport& r) {
    json table = json::array();
    for (const auto& o : r.table) {
        json eps = json::array();
        for (const auto& x : o.eps_out) eps.push_back(to_json(x));
        table.push_back({{"sigma", sigma_str(o.sigma)}, {"eps", eps}, {"zone", o.zone ? json(o.zone->str()) : json("special")}});
    }
    json out = {{"input_zone", r.input.str()}, {"table", table}};
    out["first_stable_sigma"] = r.first_stable ? json(sigma_str(*r.first_stable)) : json(nullptr);
    if (r.input.kind == ZoneKind::A) out["sigma_+++-_zone"] = r.bad_choice_zone ? json(r.bad_choice_zone->str()) : json("special");
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for Painleve VI connections, parabolic bundles and their symmetries", "pvi"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.compact, "Compact single-line JSON output");
    app.add_option("--seed", o.seed, "Random seed for sampled checks");
    app.add_option("--samples", o.samples, "Samples per property")->check(CLI::PositiveNumber);
    app.add_option("--bound", o.bound, "Numerator/denominator bound for sampled rationals")->check(CLI::Range(2L, 1000000L));

    std::function<Outcome()> action;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Outcome()> fn) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto group = [&](const std::string& name, const std::string& help) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };

    auto* conn = group("connection", "Normal-form connection of a (t, kappa, q, p) state");
    leaf(conn, "build", "Residue matrices plus invariant checks", [&] {
        return connection_build(state_from_json(load_json(o.state, "state")));
    })->add_option("--state", o.state, "State JSON (path, - or inline)")->required();
    leaf(conn, "eigen", "Eigenvalues and eigenvectors at the four poles", [&] {
        return Outcome{eigen_json(state_from_json(load_json(o.state, "state")))};
    })->add_option("--state", o.state, "State JSON")->required();

    auto* par = group("parabolic", "Quasi-parabolic structures");
    auto* pfc = leaf(par, "from-connection", "Parabolic directions of the connection", [&] {
        const PQState s = state_from_json(load_json(o.state, "state"));
        return Outcome{to_json(o.alternative ? alternative_parabolic_from_connection(s) : parabolic_from_connection(s))};
    });
    pfc->add_option("--state", o.state, "State JSON")->required();
    pfc->add_flag("--alternative", o.alternative, "Use the r+ eigenlines");
    auto* phi = leaf(par, "phi", "Image on the non-separated line", [&] {
        const QuasiPar qp = qp_of(o);
        return Outcome{{{"qp", to_json(qp)}, {"phi", to_json(phi_map(qp))}, {"normalized", to_json(normalize(qp))}}};
    });
    phi->add_option("--qp", o.qp, "Quasi-parabolic JSON");
    phi->add_option("--state", o.state, "State JSON, used when --qp is absent");

    auto* zone = group("zone", "Weight zones");
    auto* zc = leaf(zone, "classify", "Zone label of the weights", [&] { return Outcome{zone_json(weights_of(o))}; });
    zc->add_option("--eps", o.eps, "eps_1..eps_4")->required();
    zc->add_option("--mu", o.mu, "mu_1..mu_4");
    auto* ze = leaf(zone, "etpair", "Elementary transformations at two poles", [&] {
        auto p = split(o.poles);
        if (p.size() != 2) throw Error(ErrorKind::ParseError, "--poles needs two pole numbers");
        const Weights w = weights_of(o);
        return Outcome{{{"input", zone_json(w)},
                        {"output", zone_json(et_pair(w, pole_index(std::stoi(p[0])), pole_index(std::stoi(p[1]))))}}};
    });
    ze->add_option("--eps", o.eps, "eps_1..eps_4")->required();
    ze->add_option("--mu", o.mu, "mu_1..mu_4");
    ze->add_option("--poles", o.poles, "Two poles, e.g. 1,2")->required();
    auto* zb = leaf(zone, "branch", "Stable-zone branch at a pole", [&] {
        const Weights w = weights_of(o);
        return Outcome{{{"pole", o.pole}, {"branch", branch_name(stable_subzone_branch(w, pole_index(o.pole)))}}};
    });
    zb->add_option("--eps", o.eps, "eps_1..eps_4")->required();
    zb->add_option("--pole", o.pole, "Pole 1..4")->required();
    auto* zd = leaf(zone, "destabilizer", "Maximal destabilizing subbundle of a structure", [&] {
        const QuasiPar qp = qp_of(o);
        const Weights w = weights_of(o);
        auto l = find_destabilizer(qp, w);
        json body = {{"zone", classify_zone(w).str()}, {"qp", to_json(qp)}};
        body["destabilizer"] = l ? to_json(*l) : json(nullptr);
        if (l) body["excess"] = to_json(stability_excess(*l, w.eps));
        return Outcome{body};
    });
    zd->add_option("--eps", o.eps, "eps_1..eps_4")->required();
    zd->add_option("--qp", o.qp, "Quasi-parabolic JSON");
    zd->add_option("--state", o.state, "State JSON, used when --qp is absent");

    auto* hg = group("higgs", "Higgs limits");
    auto* hl = leaf(hg, "limit", "u -> 0 limit of the lambda-connection", [&] {
        const PQState s = state_from_json(load_json(o.state, "state"));
        const Weights w = weights_of(o);
        return Outcome{{{"zone", classify_zone(w).str()}, {"limit", to_json(higgs_limit(s, w))}}};
    });
    hl->add_option("--state", o.state, "State JSON")->required();
    hl->add_option("--eps", o.eps, "eps_1..eps_4")->required();

    auto* sym = group("symmetry", "Backlund transformations");
    auto* sa = leaf(sym, "apply", "Apply a word, first letter first", [&] {
        const PQState s = state_from_json(load_json(o.state, "state"));
        const BacklundWord w = parse_word(o.word);
        return Outcome{{{"word", word_str(w)}, {"input", to_json(s)}, {"output", to_json(apply_word(w, s))}}};
    });
    sa->add_option("--word", o.word, "Comma-separated generators")->required();
    sa->add_option("--state", o.state, "State JSON")->required();
    auto* sr = leaf(sym, "relations", "Check the group relations at a state", [&] {
        const PQState s = state_from_json(load_json(o.state, "state"));
        json list = json::array();
        bool all = true;
        for (const auto& r : check_relations(s)) {
            json j = {{"name", r.name}, {"pass", r.holds}};
            if (!r.holds) j["witness"] = r.witness;
            list.push_back(j);
            all = all && r.holds;
        }
        return Outcome{{{"input", to_json(s)}, {"relations", list}, {"pass", all}}, all};
    });
    sr->add_option("--state", o.state, "State JSON")->required();

    auto* lat = group("lattice", "Picard lattice of the compactified moduli surface");
    leaf(lat, "enumerate", "Classes of transversal A1-fibrations", [&] {
        json list = json::array();
        for (const auto& c : enumerate_transversal(o.nmax)) list.push_back(to_json(c));
        return Outcome{{{"nmax", o.nmax}, {"count", list.size()}, {"classes", list}}};
    })->add_option("--nmax", o.nmax, "Largest fiber multiple n")->check(CLI::PositiveNumber);
    leaf(lat, "check", "Fiber decompositions and the anticanonical divisor", [&] {
        json list = json::array();
        bool all = true;
        auto add = [&](const std::vector<LatticeCheck>& cs) {
            for (const auto& c : cs) {
                list.push_back({{"name", c.name}, {"pass", c.holds}});
                all = all && c.holds;
            }
        };
        add(singular_fiber_decompositions());
        add(anticanonical_checks());
        return Outcome{{{"checks", list}, {"pass", all}}, all};
    });

    auto* mc = group("mc", "Middle convolution on exponents");
    auto* mt = leaf(mc, "transform", "Exponents after convolution", [&] {
        const ExponentData e = exponents_of(o);
        const BetaChoice b = BetaChoice::canonical(parse_sigma(o.sigma), e);
        const McResult r = mc_exponents_detailed(e, b);
        json body = to_json(r.out);
        body["sigma"] = b.sigma_str();
        body["z"] = to_json(ExponentData{b.z, {}})["mu"];
        body["flipped_first"] = r.flipped_first;
        try {
            body["zone"] = classify_zone(r.out.eps).str();
        } catch (const Error&) {
            body["zone"] = "special";
        }
        return Outcome{body};
    });
    mt->add_option("--eps", o.eps, "eps_1..eps_4")->required();
    mt->add_option("--mu", o.mu, "mu_1..mu_4 (default 0,0,0,1/2)");
    mt->add_option("--sigma", o.sigma, "Four signs, e.g. ++++")->default_val("++++");
    auto* mi = leaf(mc, "interchange", "Search all sigma for a stable image", [&] {
        return Outcome{interchange_json(zone_interchange_check(exponents_of(o)))};
    });
    mi->add_option("--eps", o.eps, "eps_1..eps_4")->required();
    mi->add_option("--mu", o.mu, "mu_1..mu_4");

    auto* fib = group("fibration", "The q and Q fibrations");
    leaf(fib, "q", "Apparent singularity", [&] {
        return Outcome{{{"q", to_json(q_of(state_from_json(load_json(o.state, "state"))))}}};
    })->add_option("--state", o.state, "State JSON")->required();
    leaf(fib, "Q", "q + kappa0/p", [&] {
        return Outcome{{{"Q", to_json(Q_of(state_from_json(load_json(o.state, "state"))))}}};
    })->add_option("--state", o.state, "State JSON")->required();
    auto* fs = leaf(fib, "solve", "Intersection of q = lambda1 and Q = lambda2", [&] {
        auto [q, p] = transversality_solve(Rat::parse(o.lambda1), Rat::parse(o.lambda2), Rat::parse(o.kappa0));
        return Outcome{{{"q", to_json(q)}, {"p", to_json(p)}}};
    });
    fs->add_option("--lambda1", o.lambda1)->required();
    fs->add_option("--lambda2", o.lambda2)->required();
    fs->add_option("--kappa0", o.kappa0)->required();

    leaf(&app, "verify", "Run the property suites", [&] {
        Report r = run_suite(o.suite, o.seed, o.samples, o.bound);
        return Outcome{r.to_json(), r.all_pass()};
    })->add_option("--suite", o.suite, "connection|backlund|lattice|zones|higgs|mc|all");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return 0;
        return 2;
    }

    try {
        if (!action) throw Error(ErrorKind::ParseError, "no command given");
        Outcome res = action();
        out << (o.compact ? res.body.dump() : res.body.dump(2)) << "\n";
        return res.pass ? 0 : 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "ParseError: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pvi
