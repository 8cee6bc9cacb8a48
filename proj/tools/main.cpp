#include <iostream>
#include <string>
#include <vector>

#include "bellpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return bellpoly::run_cli(args, std::cout, std::cerr);
}
