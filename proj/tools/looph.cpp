#include <iostream>
#include <string>
#include <vector>

#include "looph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return looph::cli::run(args, std::cout, std::cerr);
}
