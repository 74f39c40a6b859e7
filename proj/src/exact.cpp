#include "pvi/exact.hpp"

#include <algorithm>
#include <cctype>

namespace pvi {

const char* error_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::NormalFormDegenerate: return "NormalFormDegenerate";
    case ErrorKind::SpecialParameters: return "SpecialParameters";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::SpecialWeights: return "SpecialWeights";
    case ErrorKind::NoFiniteIntersection: return "NoFiniteIntersection";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rat::Rat(long n, long d) {
    if (d == 0) throw Error(ErrorKind::DegenerateInput, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw Error(ErrorKind::DegenerateInput, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

namespace {

bool parse_int(std::string_view s, mpz_class& out) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rat Rat::parse(std::string_view s) {
    auto bad = [&] { return Error(ErrorKind::ParseError, "malformed rational \"" + std::string(s) + "\""); };
    auto slash = s.find('/');
    mpz_class n, d = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(s, n)) throw bad();
    } else {
        if (!parse_int(s.substr(0, slash), n)) throw bad();
        auto ds = s.substr(slash + 1);
        if (ds.empty() || ds[0] == '-' || ds[0] == '+' || !parse_int(ds, d)) throw bad();
        if (d == 0) throw bad();
    }
    return Rat(n, d);
}

Rat Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rat(mpq_class(q));
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::inv() const { return Rat(1) / *this; }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorKind::DegenerateInput, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rat(sn, sd);
}

ProjRat ProjRat::ratio(const Rat& num, const Rat& den) {
    if (den.is_zero()) {
        if (num.is_zero()) throw Error(ErrorKind::DegenerateInput, "0/0 on the projective line");
        return inf();
    }
    return ProjRat(num / den);
}

ProjRat ProjRat::parse(std::string_view s) {
    if (s == "inf") return inf();
    return ProjRat(Rat::parse(s));
}

const Rat& ProjRat::value() const {
    if (!v_) throw Error(ErrorKind::DegenerateInput, "value at infinity");
    return *v_;
}

std::string ProjRat::str() const { return v_ ? v_->str() : "inf"; }

std::ostream& operator<<(std::ostream& os, const ProjRat& p) { return os << p.str(); }

Mat2& Mat2::operator+=(const Mat2& o) {
    a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
    return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
    a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22;
    return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Mat2 operator*(const Rat& s, const Mat2& a) { return {s * a.a11, s * a.a12, s * a.a21, s * a.a22}; }

Vec2 operator*(const Mat2& a, const Vec2& v) {
    return {a.a11 * v[0] + a.a12 * v[1], a.a21 * v[0] + a.a22 * v[1]};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a11 << "," << m.a12 << "],[" << m.a21 << "," << m.a22 << "]]";
}

Dual inv(const Dual& a) {
    if (a.v.is_zero()) throw Error(ErrorKind::DegenerateInput, "dual division by zero");
    Rat iv = a.v.inv();
    return {iv, -a.d * iv * iv};
}

Dual operator/(const Dual& a, const Dual& b) { return a * inv(b); }

Poly::Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * c_[i]);
    return Poly(std::move(d));
}

Poly Poly::divide_linear(const Rat& r, Rat* rem) const {
    if (c_.empty()) {
        if (rem) *rem = Rat(0);
        return Poly();
    }
    std::vector<Rat> q(c_.size() - 1);
    Rat carry;
    for (std::size_t i = c_.size(); i-- > 0;) {
        Rat cur = c_[i] + carry * r;
        if (i == 0) {
            if (rem) *rem = cur;
        } else {
            q[i - 1] = cur;
        }
        carry = cur;
    }
    return Poly(std::move(q));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rat(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& a) {
    std::vector<Rat> c = a.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

LinearSolution solve_linear(const RatMatrix& m, const std::vector<Rat>& rhs) {
    const std::size_t rows = m.size();
    if (rhs.size() != rows) throw Error(ErrorKind::DegenerateInput, "rhs length mismatch");
    const std::size_t cols = rows ? m[0].size() : 0;
    RatMatrix a = m;
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw Error(ErrorKind::DegenerateInput, "ragged matrix");
        a[i].push_back(rhs[i]);
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rat lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!a[i][cols].is_zero()) throw Error(ErrorKind::NoSolution, "inconsistent linear system");

    LinearSolution out;
    out.rank = r;
    out.particular.assign(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i) out.particular[pivots[i]] = a[i][cols];

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -a[i][f];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

namespace {

// (M - lambda I) v = 0 with v normalized to (1,*) when the first coordinate can be nonzero.
std::vector<Vec2> kernel(const Mat2& n) {
    if (n.is_zero()) return {Vec2{Rat(1), Rat(0)}, Vec2{Rat(0), Rat(1)}};
    Vec2 v = (!n.a11.is_zero() || !n.a12.is_zero()) ? Vec2{n.a12, -n.a11} : Vec2{n.a22, -n.a21};
    if (!v[0].is_zero()) {
        v = {Rat(1), v[1] / v[0]};
    } else {
        v = {Rat(0), Rat(1)};
    }
    return {v};
}

}  // namespace

std::vector<EigenPair> eig2(const Mat2& m) {
    Rat tr = m.trace();
    Rat disc = tr * tr - Rat(4) * m.det();
    auto s = rat_sqrt(disc);
    if (!s) throw Error(ErrorKind::UnsupportedField, "eigenvalues are not rational (discriminant " + disc.str() + ")");
    std::vector<EigenPair> out;
    if (s->is_zero()) {
        Rat l = tr / Rat(2);
        for (auto& v : kernel(m - l * Mat2::identity())) out.push_back({l, v});
        return out;
    }
    for (Rat l : {(tr + *s) / Rat(2), (tr - *s) / Rat(2)}) out.push_back({l, kernel(m - l * Mat2::identity())[0]});
    return out;
}

}  // namespace pvi
