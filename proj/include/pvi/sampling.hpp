#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "pvi/connection.hpp"
#include "pvi/parabolic.hpp"
#include "pvi/stability.hpp"

namespace pvi {

// Deterministic small rationals. Integers are taken from the raw 64-bit stream by modulo so the
// sequence does not depend on the standard library's distribution implementation.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, long bound = 64) : rng_(seed), bound_(bound < 2 ? 2 : bound) {}

    long integer(long lo, long hi);  // inclusive
    Rat rat();                       // |num| <= bound, 1 <= den <= bound
    Rat rat_nonzero();
    Rat eps();                       // in (0, 1/2)
    long bound() const { return bound_; }

    long rejections() const { return rejections_; }
    void reject() { ++rejections_; }

private:
    std::mt19937_64 rng_;
    long bound_;
    long rejections_ = 0;
};

Rat sample_t(Sampler& s);
KappaParams sample_generic_kappa(Sampler& s);
// Kostov-generic kappa with kappa0 != 0, t off {0, 1}, q off the poles, p != 0.
PQState sample_state(Sampler& s);

// Nonspecial eps, optionally forced into one zone by resampling.
std::array<Rat, 4> sample_eps(Sampler& s);
std::array<Rat, 4> sample_eps_in_zone(Sampler& s, const ZoneLabel& zone);

// Simple structure on poles (0, 1, t, inf); each u is infinite with probability inf_chance / 8.
QuasiPar sample_simple_qp(Sampler& s, const Rat& t, int inf_chance = 0);

}  // namespace pvi
