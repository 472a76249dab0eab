#include <iostream>
#include <vector>

#include "branekit/cli/scenario.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return branekit::cli::run(args, std::cout, std::cerr);
}
