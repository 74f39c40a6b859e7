#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pvi/json_io.hpp"
#include "pvi/parabolic.hpp"

namespace pvi {

struct Check {
    std::string name;
    std::string anchor;       // the identity family the check exercises
    int criterion = 0;        // acceptance criterion number
    bool supplementary = false;
    bool pass = true;
    long evaluated = 0;
    json witness;             // first failing sample: inputs and both sides
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;
    long bound = 64;
    long rejections = 0;
    std::vector<Check> checks;
    json info = json::object();

    bool all_pass() const;
    json to_json() const;
};

const std::vector<std::string>& suite_names();  // connection, backlund, lattice, zones, higgs, mc
// suite may also be "all"
Report run_suite(const std::string& suite, std::uint64_t seed, int samples, long bound = 64);

// Largest deg L + sum_{contact} eps - sum_{rest} eps over all (deg L, contact set) that admit a nonzero map
// L -> O + O(1), from a direct linear solve per (degree, subset).
Rat brute_force_max_excess(const QuasiPar& qp, const std::array<Rat, 4>& eps);

}  // namespace pvi
