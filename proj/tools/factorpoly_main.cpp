#include <iostream>
#include <vector>

#include "factorpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fpoly::cli_main(args, std::cout, std::cerr);
}
