#include <iostream>
#include <string>
#include <vector>

#include "fuzzyasp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fuzzyasp::cli::run(args, std::cout, std::cerr);
}
