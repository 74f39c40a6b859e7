#include "pvi/mconv.hpp"

namespace pvi {

namespace {

const Rat kHalf(1, 2);

bool sum_is_odd_normalized(const std::array<Rat, 4>& mu) {
    return (mu[0] + mu[1] + mu[2] + mu[3] + kHalf).is_integer();
}

}  // namespace

ExponentData ExponentData::make(const std::array<Rat, 4>& mu, const std::array<Rat, 4>& eps) {
    for (const auto& e : eps)
        if (e.sign() <= 0 || e >= kHalf) throw Error(ErrorKind::SpecialParameters, "eps = " + e.str() + " outside (0, 1/2)");
    if (!sum_is_odd_normalized(mu)) throw Error(ErrorKind::DegenerateInput, "sum of mu must be -1/2 mod 1");
    ExponentData d{mu, eps};
    for (auto& m : d.mu) m = m.frac();
    return d;
}

ExponentData ExponentData::from_eps(const std::array<Rat, 4>& eps) { return make({0, 0, 0, kHalf}, eps); }

BetaChoice BetaChoice::canonical(const std::array<int, 4>& sigma, const ExponentData& e) {
    BetaChoice b;
    b.sigma = sigma;
    Rat chosen;
    for (int i = 0; i < 4; ++i) chosen += e.mu[i] + Rat(sigma[i]) * e.eps[i];
    b.z = {0, 0, 0, (-chosen).frac()};
    return b;
}

std::string sigma_str(const std::array<int, 4>& sigma) {
    std::string s;
    for (int x : sigma) s += x > 0 ? '+' : '-';
    return s;
}

std::string BetaChoice::sigma_str() const { return pvi::sigma_str(sigma); }

std::array<int, 4> parse_sigma(const std::string& s) {
    if (s.size() != 4) throw Error(ErrorKind::ParseError, "sigma needs four signs, got \"" + s + "\"");
    std::array<int, 4> out{};
    for (int i = 0; i < 4; ++i) {
        if (s[i] == '+') out[i] = 1;
        else if (s[i] == '-') out[i] = -1;
        else throw Error(ErrorKind::ParseError, "sigma entries are + or -, got \"" + s + "\"");
    }
    return out;
}

std::vector<std::array<int, 4>> all_sigmas() {
    std::vector<std::array<int, 4>> out;
    for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 4> s{};
        for (int i = 0; i < 4; ++i) s[i] = (mask >> (3 - i) & 1) ? -1 : 1;
        out.push_back(s);
    }
    return out;
}

long defect(long r, long n, const std::vector<long>& multiplicities) {
    long d = (n - 2) * r;
    for (long m : multiplicities) d -= m;
    return d;
}

McResult mc_exponents_detailed(const ExponentData& e, const BetaChoice& choice) {
    if (!sum_is_odd_normalized(e.mu)) throw Error(ErrorKind::DegenerateInput, "sum of mu must be -1/2 mod 1");
    for (const auto& x : e.eps)
        if (x.sign() <= 0 || x >= kHalf) throw Error(ErrorKind::SpecialParameters, "eps = " + x.str() + " outside (0, 1/2)");
    if (eps_special(e.eps)) throw Error(ErrorKind::SpecialParameters, "a signed eps sum plus 1/2 is an integer");
    Rat chosen_total, zsum;
    for (int i = 0; i < 4; ++i) {
        chosen_total += e.mu[i] + Rat(choice.sigma[i]) * e.eps[i];
        zsum += choice.z[i];
    }
    if (!(zsum + chosen_total).is_integer())
        throw Error(ErrorKind::DegenerateInput, "b_1 b_2 b_3 b_4 must equal (f_1 f_2 f_3 f_4)^{-1}");

    Rat signed_sum;
    for (int i = 0; i < 4; ++i) signed_sum += Rat(choice.sigma[i]) * e.eps[i];
    McResult r;
    for (int i = 0; i < 4; ++i) {
        const Rat y = Rat(-1, 2) + signed_sum - Rat(2 * choice.sigma[i]) * e.eps[i];
        r.y[i] = y.frac();
        // the pair {z, z + y} read as mu' +- eps' with the lower representative y - 1 in (-1, 0)
        r.out.eps[i] = (Rat(1) - r.y[i]) / Rat(2);
        r.out.mu[i] = choice.z[i] + (r.y[i] - 1) / Rat(2);
    }
    if (!sum_is_odd_normalized(r.out.mu)) {
        r.flipped_first = true;
        r.out.eps[0] = kHalf - r.out.eps[0];
        r.out.mu[0] += kHalf;
    }
    for (auto& m : r.out.mu) m = m.frac();
    return r;
}

ExponentData mc_exponents(const ExponentData& e, const BetaChoice& choice) { return mc_exponents_detailed(e, choice).out; }

InterchangeReport zone_interchange_check(const ExponentData& e) {
    InterchangeReport rep;
    rep.input = classify_zone(e.eps);
    if (!rep.input.unstable()) throw Error(ErrorKind::DegenerateInput, "input weights are already in the stable zone");
    for (const auto& s : all_sigmas()) {
        SigmaOutcome o;
        o.sigma = s;
        const ExponentData out = mc_exponents(e, BetaChoice::canonical(s, e));
        o.eps_out = out.eps;
        try {
            o.zone = classify_zone(out.eps);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::SpecialWeights) throw;
        }
        if (!rep.first_stable && o.zone && !o.zone->unstable()) rep.first_stable = s;
        if (rep.input.kind == ZoneKind::A && s == std::array<int, 4>{1, 1, 1, -1}) rep.bad_choice_zone = o.zone;
        rep.table.push_back(o);
    }
    return rep;
}

}  // namespace pvi
