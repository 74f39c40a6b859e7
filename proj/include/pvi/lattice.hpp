#pragma once

#include <array>
#include <string>
#include <vector>

namespace pvi {

// Basis (C0, F, E1+, E1-, E2+, E2-, E3+, E3-, E4+, E4-) of Pic of the eight-point blow-up of Sigma_2.
struct DivClass {
    std::array<long, 10> c{};

    static DivClass C0();
    static DivClass F();
    static DivClass E(int i, bool plus);  // i in 0..3
    static DivClass C1();                // C0 + 2F
    static DivClass Fprime(int i);       // F - Ei+ - Ei-
    static DivClass Eprime_minus(int i); // C1 - sum_{j != i} Ej-
    static DivClass Y();
    static DivClass Yred();
    // C1 + F - sum E_i^{sigma_i}; sigma[i] true for +.
    static DivClass L_sigma(const std::array<bool, 4>& sigma);

    DivClass& operator+=(const DivClass& o);
    DivClass& operator-=(const DivClass& o);
    friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
    friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
    friend DivClass operator*(long k, DivClass a);
    bool is_zero() const;
    std::string str() const;
    friend bool operator==(const DivClass&, const DivClass&) = default;
};

long intersect(const DivClass& a, const DivClass& b);

struct TransversalClass {
    DivClass cls;
    long n = 0;
    std::array<bool, 4> sigma{};  // sigma[i] true when E_i^+ is subtracted
    std::string label() const;    // e.g. "+-+-"
};

std::vector<TransversalClass> enumerate_transversal(long n_max);

struct LatticeCheck {
    std::string name;
    bool holds = false;
    std::string witness;
};

std::vector<LatticeCheck> singular_fiber_decompositions();
std::vector<LatticeCheck> anticanonical_checks();
bool anticanonical_check();

// Counts of positive and negative pivots of the Gram matrix over Q.
std::array<int, 2> gram_signature();

}  // namespace pvi
