#include "pvi/lattice.hpp"

#include <algorithm>

#include "pvi/exact.hpp"

namespace pvi {

namespace {

DivClass unit(int k) {
    DivClass d;
    d.c[k] = 1;
    return d;
}

long basis_product(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0 && b == 0) return -2;
    if (a == 0 && b == 1) return 1;
    if (a == b && a >= 2) return -1;
    return 0;
}

}  // namespace

DivClass DivClass::C0() { return unit(0); }
DivClass DivClass::F() { return unit(1); }
DivClass DivClass::E(int i, bool plus) { return unit(2 + 2 * i + (plus ? 0 : 1)); }
DivClass DivClass::C1() { return C0() + 2 * F(); }
DivClass DivClass::Fprime(int i) { return F() - E(i, true) - E(i, false); }

DivClass DivClass::Eprime_minus(int i) {
    DivClass d = C1();
    for (int j = 0; j < 4; ++j)
        if (j != i) d -= E(j, false);
    return d;
}

DivClass DivClass::Y() {
    DivClass d = 2 * C0();
    for (int i = 0; i < 4; ++i) d += Fprime(i);
    return d;
}

DivClass DivClass::Yred() {
    DivClass d = C0();
    for (int i = 0; i < 4; ++i) d += Fprime(i);
    return d;
}

DivClass DivClass::L_sigma(const std::array<bool, 4>& sigma) {
    DivClass d = C1() + F();
    for (int i = 0; i < 4; ++i) d -= E(i, sigma[i]);
    return d;
}

DivClass& DivClass::operator+=(const DivClass& o) {
    for (int k = 0; k < 10; ++k) c[k] += o.c[k];
    return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) {
    for (int k = 0; k < 10; ++k) c[k] -= o.c[k];
    return *this;
}

DivClass operator*(long k, DivClass a) {
    for (auto& x : a.c) x *= k;
    return a;
}

bool DivClass::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
}

std::string DivClass::str() const {
    std::string s = "[";
    for (int k = 0; k < 10; ++k) s += (k ? "," : "") + std::to_string(c[k]);
    return s + "]";
}

long intersect(const DivClass& a, const DivClass& b) {
    long s = 0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            if (a.c[i] && b.c[j]) s += a.c[i] * b.c[j] * basis_product(i, j);
    return s;
}

std::string TransversalClass::label() const {
    std::string s;
    for (bool b : sigma) s += b ? '+' : '-';
    return s;
}

std::vector<TransversalClass> enumerate_transversal(long n_max) {
    if (n_max < 1) throw Error(ErrorKind::DegenerateInput, "n_max must be at least 1");
    // L.E_i^+ = a_i and L.F'_i = 1 - a_i - b_i bound the search box: a, b in [0, 1].
    const long box = n_max + 1;
    std::array<std::vector<std::array<long, 2>>, 4> local;
    for (int i = 0; i < 4; ++i)
        for (long a = -box; a <= box; ++a)
            for (long b = -box; b <= box; ++b) {
                DivClass l = DivClass::C1() - a * DivClass::E(i, true) - b * DivClass::E(i, false);
                if (intersect(l, DivClass::Fprime(i)) >= 0 && intersect(l, DivClass::E(i, true)) >= 0 &&
                    intersect(l, DivClass::E(i, false)) >= 0)
                    local[i].push_back({a, b});
            }
    const DivClass yred = DivClass::Yred();
    std::vector<TransversalClass> out;
    for (long n = 0; n <= n_max; ++n)
        for (auto& p0 : local[0])
            for (auto& p1 : local[1])
                for (auto& p2 : local[2])
                    for (auto& p3 : local[3]) {
                        const std::array<std::array<long, 2>, 4> ab{p0, p1, p2, p3};
                        DivClass l = DivClass::C1() + n * DivClass::F();
                        for (int i = 0; i < 4; ++i) l -= ab[i][0] * DivClass::E(i, true) + ab[i][1] * DivClass::E(i, false);
                        if (intersect(l, yred) != 1 || intersect(l, l) != 0) continue;
                        TransversalClass tc{l, n};
                        for (int i = 0; i < 4; ++i) tc.sigma[i] = ab[i][0] == 1;
                        out.push_back(tc);
                    }
    return out;
}

namespace {

LatticeCheck zero_check(const std::string& name, const DivClass& d) {
    return {name, d.is_zero(), d.is_zero() ? "" : "difference " + d.str()};
}

LatticeCheck value_check(const std::string& name, long got, long want) {
    return {name, got == want, got == want ? "" : "got " + std::to_string(got) + ", want " + std::to_string(want)};
}

}  // namespace

std::vector<LatticeCheck> singular_fiber_decompositions() {
    std::vector<LatticeCheck> out;
    const DivClass l = DivClass::L_sigma({false, false, false, false});
    for (int i = 0; i < 4; ++i) {
        const std::string n = std::to_string(i + 1);
        out.push_back(zero_check("F=F'" + n + "+E" + n + "+ +E" + n + "-",
                                 DivClass::F() - DivClass::Fprime(i) - DivClass::E(i, true) - DivClass::E(i, false)));
        out.push_back(zero_check("L=F'" + n + "+(E')" + n + "- +E" + n + "+",
                                 l - DivClass::Fprime(i) - DivClass::Eprime_minus(i) - DivClass::E(i, true)));
        out.push_back(value_check("(E')" + n + "-^2=-1", intersect(DivClass::Eprime_minus(i), DivClass::Eprime_minus(i)), -1));
        out.push_back(value_check("L.E" + n + "-=1", intersect(l, DivClass::E(i, false)), 1));
    }
    out.push_back(value_check("L.C0=1", intersect(l, DivClass::C0()), 1));
    out.push_back(value_check("L.F=1", intersect(l, DivClass::F()), 1));
    return out;
}

std::vector<LatticeCheck> anticanonical_checks() {
    const DivClass y = DivClass::Y();
    std::vector<LatticeCheck> out;
    out.push_back(value_check("Y.C0=0", intersect(y, DivClass::C0()), 0));
    for (int i = 0; i < 4; ++i)
        out.push_back(value_check("Y.F'" + std::to_string(i + 1) + "=0", intersect(y, DivClass::Fprime(i)), 0));
    DivClass expanded = 2 * DivClass::C0() + 4 * DivClass::F();
    for (int i = 0; i < 4; ++i) expanded -= DivClass::E(i, true) + DivClass::E(i, false);
    out.push_back(zero_check("Y=2C0+4F-sum E", y - expanded));
    out.push_back(value_check("Y^2=0", intersect(y, y), 0));
    return out;
}

bool anticanonical_check() {
    auto checks = anticanonical_checks();
    return std::all_of(checks.begin(), checks.end(), [](const LatticeCheck& c) { return c.holds; });
}

std::array<int, 2> gram_signature() {
    RatMatrix g(10, std::vector<Rat>(10));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) g[i][j] = Rat(intersect(unit(i), unit(j)));
    // symmetric elimination; a zero pivot is repaired by adding a later row/column that fixes it
    std::array<int, 2> sig{0, 0};
    for (int k = 0; k < 10; ++k) {
        if (g[k][k].is_zero()) {
            for (int m = k + 1; m < 10; ++m) {
                if (g[k][m].is_zero()) continue;
                for (int j = 0; j < 10; ++j) g[k][j] += g[m][j];
                for (int j = 0; j < 10; ++j) g[j][k] += g[j][m];
                if (!g[k][k].is_zero()) break;
            }
        }
        if (g[k][k].is_zero()) continue;
        const Rat piv = g[k][k];
        ++sig[piv.sign() > 0 ? 0 : 1];
        for (int i = k + 1; i < 10; ++i) {
            const Rat f = g[i][k] / piv;
            if (f.is_zero()) continue;
            for (int j = k; j < 10; ++j) g[i][j] -= f * g[k][j];
        }
        for (int j = k + 1; j < 10; ++j) g[k][j] = 0;
        for (int i = k + 1; i < 10; ++i) g[i][k] = 0;
    }
    return sig;
}

}  // namespace pvi
