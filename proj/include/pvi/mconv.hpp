#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pvi/exact.hpp"
#include "pvi/stability.hpp"

namespace pvi {

// Local monodromy exponents mu_i +- eps_i in Q/Z.
struct ExponentData {
    std::array<Rat, 4> mu;
    std::array<Rat, 4> eps;

    // Requires 0 < eps_i < 1/2 and sum mu = -1/2 mod 1; mu is reduced to [0, 1).
    static ExponentData make(const std::array<Rat, 4>& mu, const std::array<Rat, 4>& eps);
    // mu = (0, 0, 0, 1/2).
    static ExponentData from_eps(const std::array<Rat, 4>& eps);
    friend bool operator==(const ExponentData&, const ExponentData&) = default;
};

struct BetaChoice {
    std::array<int, 4> sigma{1, 1, 1, 1};  // +1 picks f_i^+, -1 picks f_i^-
    std::array<Rat, 4> z;                  // exponents of b_i

    // z_1 = z_2 = z_3 = 0 and z_4 closing b_1 b_2 b_3 b_4 = (f_1 f_2 f_3 f_4)^{-1}.
    static BetaChoice canonical(const std::array<int, 4>& sigma, const ExponentData& e);
    std::string sigma_str() const;
};

std::array<int, 4> parse_sigma(const std::string& s);
std::string sigma_str(const std::array<int, 4>& sigma);
// The 16 sign vectors, ++++ first, then lexicographic with + before -.
std::vector<std::array<int, 4>> all_sigmas();

long defect(long r, long n, const std::vector<long>& multiplicities);

struct McResult {
    ExponentData out;
    std::array<Rat, 4> y;  // reduced to [0, 1)
    bool flipped_first = false;
};

McResult mc_exponents_detailed(const ExponentData& e, const BetaChoice& choice);
ExponentData mc_exponents(const ExponentData& e, const BetaChoice& choice);

struct SigmaOutcome {
    std::array<int, 4> sigma;
    std::optional<ZoneLabel> zone;  // empty when the image is special
    std::array<Rat, 4> eps_out;
};

struct InterchangeReport {
    ZoneLabel input;
    std::vector<SigmaOutcome> table;
    std::optional<std::array<int, 4>> first_stable;
    std::optional<ZoneLabel> bad_choice_zone;  // sigma = +++- when the input is in zone A
};

InterchangeReport zone_interchange_check(const ExponentData& e);

}  // namespace pvi
