#include <iostream>

#include "dynwild/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dynwild::cli::main(args, std::cin, std::cout, std::cerr);
}
