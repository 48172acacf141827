#include <iostream>
#include <string>
#include <vector>

#include "psym/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return psym::cli::run(args, std::cout, std::cerr);
}
