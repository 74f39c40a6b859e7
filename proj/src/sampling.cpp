#include "pvi/sampling.hpp"

namespace pvi {

namespace {

constexpr int kMaxTries = 1000000;

[[noreturn]] void exhausted(const char* what) {
    throw Error(ErrorKind::DegenerateInput, std::string("sampler could not produce ") + what);
}

}  // namespace

long Sampler::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rat Sampler::rat() { return Rat(integer(-bound_, bound_), integer(1, bound_)); }

Rat Sampler::rat_nonzero() {
    for (int k = 0; k < kMaxTries; ++k) {
        Rat r = rat();
        if (!r.is_zero()) return r;
        reject();
    }
    exhausted("a nonzero rational");
}

Rat Sampler::eps() {
    const long d = integer(3, bound_ < 3 ? 3 : bound_);
    return Rat(integer(1, (d - 1) / 2), d);
}

Rat sample_t(Sampler& s) {
    for (int k = 0; k < kMaxTries; ++k) {
        Rat t = s.rat();
        if (!t.is_zero() && t != Rat(1)) return t;
        s.reject();
    }
    exhausted("t");
}

KappaParams sample_generic_kappa(Sampler& s) {
    for (int k = 0; k < kMaxTries; ++k) {
        KappaParams kp(s.rat(), s.rat(), s.rat(), s.rat());
        if (kappa_generic(kp) && !kp.kappa0().is_zero()) return kp;
        s.reject();
    }
    exhausted("generic kappa");
}

PQState sample_state(Sampler& s) {
    PQState st;
    st.t = sample_t(s);
    st.kappa = sample_generic_kappa(s);
    for (int k = 0; k < kMaxTries; ++k) {
        Rat q = s.rat();
        if (!q.is_zero() && q != Rat(1) && q != st.t) {
            st.q = ProjRat(q);
            st.p = s.rat_nonzero();
            return st;
        }
        s.reject();
    }
    exhausted("q");
}

std::array<Rat, 4> sample_eps(Sampler& s) {
    for (int k = 0; k < kMaxTries; ++k) {
        std::array<Rat, 4> e{s.eps(), s.eps(), s.eps(), s.eps()};
        if (!eps_special(e)) return e;
        s.reject();
    }
    exhausted("nonspecial eps");
}

std::array<Rat, 4> sample_eps_in_zone(Sampler& s, const ZoneLabel& zone) {
    for (int k = 0; k < kMaxTries; ++k) {
        auto e = sample_eps(s);
        if (classify_zone(e) == zone) return e;
        s.reject();
    }
    exhausted(("eps in zone " + zone.str()).c_str());
}

QuasiPar sample_simple_qp(Sampler& s, const Rat& t, int inf_chance) {
    for (int k = 0; k < kMaxTries; ++k) {
        std::array<ProjRat, 4> u;
        for (auto& x : u) x = s.integer(0, 7) < inf_chance ? ProjRat::inf() : ProjRat(s.rat());
        QuasiPar qp = QuasiPar::standard(t, u);
        if (is_simple(qp)) return qp;
        s.reject();
    }
    exhausted("a simple quasi-parabolic structure");
}

}  // namespace pvi
