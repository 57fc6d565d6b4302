#include <iostream>
#include <vector>

#include "cnproj/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cnproj::run_cli(args, std::cout, std::cerr);
}
