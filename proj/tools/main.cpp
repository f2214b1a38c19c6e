#include <iostream>
#include <vector>

#include "dmf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dmf::cli::run(args, std::cout, std::cerr);
}
