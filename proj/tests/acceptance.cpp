// One line per acceptance criterion; exits nonzero when any criterion fails.
// Usage: acceptance [samples] [seed]

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "pvi/verify.hpp"

using namespace pvi;

namespace {

const std::map<int, std::string> kTitles = {
    {1, "connection normal form"},
    {2, "residue eigenstructure"},
    {3, "Q map and s0"},
    {4, "affine Weyl relations and composite words"},
    {5, "transversality of the two fibrations"},
    {6, "symplectic form"},
    {7, "transversal curve classes"},
    {8, "zone classification and destabilizers"},
    {9, "Higgs limits"},
    {10, "middle convolution"},
};

}  // namespace

int main(int argc, char** argv) {
    const int samples = argc > 1 ? std::atoi(argv[1]) : 100;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20261014;

    std::map<int, std::vector<Check>> by_criterion;
    std::map<int, std::vector<Check>> extra;
    for (const auto& suite : suite_names()) {
        Report r = run_suite(suite, seed, samples);
        for (auto& c : r.checks) (c.supplementary ? extra : by_criterion)[c.criterion].push_back(c);
        std::cout << "# suite " << suite << ": " << r.checks.size() << " checks, " << r.rejections << " rejected samples\n";
    }

    int failed = 0;
    for (const auto& [n, title] : kTitles) {
        const auto& checks = by_criterion[n];
        bool pass = !checks.empty();
        long evaluated = 0;
        for (const auto& c : checks) {
            pass = pass && c.pass;
            evaluated += c.evaluated;
        }
        if (!pass) ++failed;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << " (" << title << "): " << checks.size()
                  << " checks, " << evaluated << " evaluations\n";
        for (const auto& c : checks)
            if (!c.pass) std::cout << "    failed: " << c.name << "\n      witness: " << c.witness.dump() << "\n";
        for (const auto& c : extra[n])
            std::cout << "    [extra " << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
    }
    std::cout << (failed ? "FAILED " : "OK ") << 10 - failed << "/10 criteria\n";
    return failed ? 1 : 0;
}
