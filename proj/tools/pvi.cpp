#include <iostream>

#include "pvi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pvi::run_cli(args, std::cout, std::cerr);
}
