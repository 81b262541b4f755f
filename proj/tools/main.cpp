#include <iostream>
#include <string>
#include <vector>

#include "sizebias/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return sizebias::cli::run(args, std::cout, std::cerr);
}
