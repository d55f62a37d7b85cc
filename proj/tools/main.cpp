#include <iostream>
#include <string>
#include <vector>

#include "relsep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return relsep::cli::run(args, std::cout, std::cerr);
}
