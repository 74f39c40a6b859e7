#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pvi/error.hpp"

namespace pvi {

// Canonical rational backed by mpq_class; every constructor leaves the value reduced.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "n/d" or "n"; a zero denominator is a parse error.
    static Rat parse(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    Rat floor() const;
    Rat frac() const { return *this - floor(); }  // in [0,1)
    Rat abs() const;
    Rat inv() const;

    std::string str() const;  // always "num/den"

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Exact square root when r is the square of a rational.
std::optional<Rat> rat_sqrt(const Rat& r);

// A point of P^1 over Q.
class ProjRat {
public:
    ProjRat() : v_(Rat(0)) {}
    ProjRat(const Rat& r) : v_(r) {}
    ProjRat(long n) : v_(Rat(n)) {}
    static ProjRat inf() { ProjRat p; p.v_.reset(); return p; }
    // num/den with den = 0 meaning infinity; 0/0 is rejected.
    static ProjRat ratio(const Rat& num, const Rat& den);
    static ProjRat parse(std::string_view s);

    bool is_inf() const { return !v_.has_value(); }
    bool is_finite() const { return v_.has_value(); }
    const Rat& value() const;

    std::string str() const;

    friend bool operator==(const ProjRat& a, const ProjRat& b) { return a.v_ == b.v_; }

private:
    std::optional<Rat> v_;
};

std::ostream& operator<<(std::ostream& os, const ProjRat& p);

using Vec2 = std::array<Rat, 2>;

struct Mat2 {
    Rat a11, a12, a21, a22;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    Rat det() const { return a11 * a22 - a12 * a21; }
    Rat trace() const { return a11 + a22; }
    bool is_zero() const { return a11.is_zero() && a12.is_zero() && a21.is_zero() && a22.is_zero(); }

    Mat2& operator+=(const Mat2& o);
    Mat2& operator-=(const Mat2& o);
    friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
    friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(const Rat& s, const Mat2& a);
    friend Vec2 operator*(const Mat2& a, const Vec2& v);
    Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

// First-order jet value + derivative*delta with delta^2 = 0.
struct Dual {
    Rat v;
    Rat d;

    Dual() = default;
    Dual(const Rat& value) : v(value) {}
    Dual(const Rat& value, const Rat& deriv) : v(value), d(deriv) {}
    static Dual variable(const Rat& at) { return {at, Rat(1)}; }

    Dual operator-() const { return {-v, -d}; }
    friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
    friend Dual operator/(const Dual& a, const Dual& b);
    friend bool operator==(const Dual&, const Dual&) = default;
};

Dual inv(const Dual& a);

// Dense polynomial over Q, coefficients in ascending degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> c);
    static Poly constant(const Rat& c) { return Poly({c}); }
    static Poly x_minus(const Rat& r) { return Poly({-r, Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat operator()(const Rat& x) const;
    Poly derivative() const;

    // Division by (x - r); the remainder is returned through rem.
    Poly divide_linear(const Rat& r, Rat* rem) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& a);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Rat> c_;
};

using RatMatrix = std::vector<std::vector<Rat>>;

struct LinearSolution {
    std::size_t rank = 0;
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> nullspace;  // one vector per free column, in column order
};

// Exact Gauss-Jordan; throws NoSolution when the system is inconsistent.
LinearSolution solve_linear(const RatMatrix& m, const std::vector<Rat>& rhs);

struct EigenPair {
    Rat value;
    Vec2 vector;
};

// Eigenpairs in decreasing eigenvalue order; vectors are scaled to (1,*) when possible.
std::vector<EigenPair> eig2(const Mat2& m);

}  // namespace pvi
