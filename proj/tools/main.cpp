#include <iostream>
#include <string>
#include <vector>

#include "sumsynth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sumsynth::run_cli(args, std::cout, std::cerr);
}
