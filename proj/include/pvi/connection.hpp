#pragma once

#include <array>

#include "pvi/exact.hpp"

namespace pvi {

// Local exponents; kappa0 is never stored, it is solved from 2k0 + k1 + k2 + k3 + k4 = 1.
struct KappaParams {
    std::array<Rat, 4> k;  // kappa_1 .. kappa_4

    KappaParams() = default;
    KappaParams(Rat k1, Rat k2, Rat k3, Rat k4) : k{std::move(k1), std::move(k2), std::move(k3), std::move(k4)} {}
    // Checks the affine relation against a supplied kappa0.
    static KappaParams with_kappa0(const Rat& k0, const Rat& k1, const Rat& k2, const Rat& k3, const Rat& k4);

    Rat kappa0() const { return (Rat(1) - k[0] - k[1] - k[2] - k[3]) / Rat(2); }
    // i in 0..4, i = 0 meaning kappa0.
    Rat kappa(int i) const { return i == 0 ? kappa0() : k[i - 1]; }

    friend bool operator==(const KappaParams&, const KappaParams&) = default;
};

// kappa_i not integral and no signed sum of kappa_1..kappa_4 an odd integer.
bool kappa_generic(const KappaParams& k);

struct ResidueVector {
    std::array<Rat, 4> r_plus;
    std::array<Rat, 4> r_minus;
    Rat lambda = 1;
    long degree = 1;

    // Residues of the degree-1 normal form; the pole at infinity is shifted by -1/2.
    static ResidueVector from_kappa(const KappaParams& k);
    Rat fuchs_defect() const;  // zero when the Fuchs relation holds
};

bool kostov_generic(const ResidueVector& r);
bool nonresonant(const ResidueVector& r);

// Swap the eigenvalues at pole i (0-based) and shift by lambda; lowers the degree by one.
ResidueVector elementary_transform_residues(const ResidueVector& r, int i);

struct PQState {
    Rat t;
    KappaParams kappa;
    ProjRat q;
    Rat p;

    Rat p_tilde() const;  // q(q-1)(q-t)p
    friend bool operator==(const PQState&, const PQState&) = default;
};

// Residues at 0, 1, t in the frame <e,f>, residue at infinity in <e,xf>, plus the constant term.
struct FourPoleConnection {
    Rat t;
    Mat2 A1, A2, A3, A4;
    Mat2 C;

    const Mat2& residue(int i) const;  // i in 1..4

    // Entries of A(x) = A1/x + A2/(x-1) + A3/(x-t) + C at a finite x off the poles.
    Mat2 eval(const Rat& x) const;

    // x(x-1)(x-t) times the given entry of A(x), as a polynomial in x.
    Poly cleared_entry(int row, int col) const;

    // Residue at infinity in the frame <e,xf> obtained from A1..A3 and C by the chart change.
    Mat2 infinity_residue_from_chart() const;
};

FourPoleConnection build_connection(const PQState& s);

// The alternate gauge nabla_0 + p*Theta with parabolic directions normalized to (0,1,u,0).
FourPoleConnection build_connection_Qp(const Rat& t, const KappaParams& kappa, const Rat& Q, const Rat& p);

// The zero of the (1,2) entry of A(x); infinity when the entry has no affine zero.
ProjRat apparent_point(const FourPoleConnection& c);

// A(2,2) at x = q plus sum kappa_i / (2(q - t_i)); the gauge-invariant definition of p.
Rat p_invariant(const FourPoleConnection& c, const KappaParams& kappa, const Rat& q);

struct PoleEigen {
    Rat r_minus;
    Vec2 v_minus;
    Rat r_plus;
    Vec2 v_plus;
};

std::array<PoleEigen, 4> eigen_table(const FourPoleConnection& c, const PQState& s);

enum class Sheet { Generic, Plus, Minus };
const char* sheet_name(Sheet s);

struct PPoint {
    ProjRat base;
    Sheet sheet = Sheet::Generic;
    friend bool operator==(const PPoint&, const PPoint&) = default;
};

// The four poles 0, 1, t, infinity.
std::array<ProjRat, 4> standard_poles(const Rat& t);

// fiber_in_parabolic[i] says whether the O(1) fiber over t_i is the parabolic line (u_i = infinity).
PPoint apparent_singularity(const PQState& s, const std::array<bool, 4>& fiber_in_parabolic);

}  // namespace pvi
