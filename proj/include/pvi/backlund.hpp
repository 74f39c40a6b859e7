#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvi/connection.hpp"

namespace pvi {

enum class Gen { s0, s1, s2, s3, s4, r12_34, r13_24, r14_23 };

using SymState = PQState;
using BacklundWord = std::vector<Gen>;

const char* gen_name(Gen g);
Gen parse_gen(std::string_view s);
// Comma-separated generator names; the empty string is the empty word.
BacklundWord parse_word(std::string_view s);
std::string word_str(const BacklundWord& w);

SymState apply_generator(Gen g, const SymState& s);
// Left to right: the first letter acts first.
SymState apply_word(const BacklundWord& w, const SymState& s);

// r12_34 s3 s4 s0 s1 s2 s0 as printed, and the relabeled word that moves kappa_1, kappa_2 by +1.
BacklundWord kappa_shift_word();
BacklundWord kappa_shift_word_relabeled();
// r12_34 s0 s1 s2 s0 as printed, and r12_34 s0 s3 s4 s0 which realizes the closed form.
BacklundWord schlesinger_word();
BacklundWord schlesinger_word_relabeled();

struct RelationResult {
    std::string name;
    bool holds = false;
    std::string witness;  // both sides when the relation fails
};

std::vector<RelationResult> check_relations(const SymState& s);
// Every word that check_relations evaluates avoids the formula poles at s.
bool relations_defined(const SymState& s);

ProjRat q_of(const SymState& s);
ProjRat Q_of(const SymState& s);
// Q of the alternative parabolic structure, closed form.
ProjRat Qprime_of(const SymState& s);

// Closed form of the (q, p) action with kappa -> (1 - k1, 1 - k2, k3, k4).
SymState schlesinger_composite_qp(const SymState& s);

std::pair<Rat, Rat> al_chart(const SymState& s);
// dy/dx at the exceptional points over the diagonal for poles 1..4.
std::array<Rat, 4> blowup_slopes(const KappaParams& k);

struct SymplecticData {
    Rat jacobian;   // det d(x,y)/d(q,p)
    Rat factor;     // kappa0 / (x - y)^2
    Rat product;
};
SymplecticData symplectic_data(const SymState& s);
bool symplectic_check(const SymState& s);

// The point of {q = lambda1} meeting {Q = lambda2}.
std::pair<Rat, Rat> transversality_solve(const Rat& lambda1, const Rat& lambda2, const Rat& kappa0);

}  // namespace pvi
