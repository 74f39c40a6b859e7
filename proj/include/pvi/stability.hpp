#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pvi/exact.hpp"
#include "pvi/parabolic.hpp"

namespace pvi {

struct Weights {
    std::array<Rat, 4> mu;
    std::array<Rat, 4> eps;

    // Enforces 0 < eps_i < 1/2.
    static Weights make(const std::array<Rat, 4>& mu, const std::array<Rat, 4>& eps);
    static Weights from_eps(const std::array<Rat, 4>& eps) { return make({}, eps); }
    Rat alpha_plus(int i) const { return mu[i] + eps[i]; }
    Rat alpha_minus(int i) const { return mu[i] - eps[i]; }
    friend bool operator==(const Weights&, const Weights&) = default;
};

enum class ZoneKind { A, B, C, Stable };

struct ZoneLabel {
    ZoneKind kind = ZoneKind::Stable;
    int i = 0;  // C(i,j) with 0 <= i < j <= 3
    int j = 0;

    static ZoneLabel C(int a, int b);
    static std::vector<ZoneLabel> unstable_labels();  // A, B, then the six C(i,j)
    bool unstable() const { return kind != ZoneKind::Stable; }
    std::string str() const;  // "A", "B", "C12", ..., "stable"
    static ZoneLabel parse(const std::string& s);
    friend bool operator==(const ZoneLabel&, const ZoneLabel&) = default;
};

// Some sum of +-eps_i plus 1/2 is an integer; the zone walls are among these.
bool eps_special(const std::array<Rat, 4>& eps);

ZoneLabel classify_zone(const std::array<Rat, 4>& eps);
inline ZoneLabel classify_zone(const Weights& w) { return classify_zone(w.eps); }

// Elementary transformations at poles i and j (0-based): eps -> 1/2 - eps, mu -> mu - 1/2.
Weights et_pair(const Weights& w, int i, int j);

// alpha[i] = (alpha_i^+, alpha_i^-).
bool nonspecial_weights(const std::array<std::array<Rat, 2>, 4>& alpha, long d);

struct Subbundle {
    int degree = 0;
    // degree 1: empty; degree 0: (v0, v1) of (1, v); degree -1: (v0, v1, w0, w1, w2) of (v, w)
    std::vector<Rat> coefficients;
    std::array<bool, 4> contact{};

    std::vector<int> contact_list() const;  // 0-based
    friend bool operator==(const Subbundle&, const Subbundle&) = default;
};

// deg L + sum_{contact} eps - sum_{others} eps; L destabilizes when this exceeds 1/2.
Rat stability_excess(const Subbundle& l, const std::array<Rat, 4>& eps);

// All saturated subbundles that can destabilize: O(1), degree 0 through pairs, O(-1) through all four.
std::vector<Subbundle> candidate_subbundles(const QuasiPar& qp);

std::optional<Subbundle> find_destabilizer(const QuasiPar& qp, const Weights& w);

enum class Branch { OriginUnstable, ColinearUnstable };
const char* branch_name(Branch b);

Branch stable_subzone_branch(const Weights& w, int i);

}  // namespace pvi
