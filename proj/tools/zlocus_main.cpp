#include <iostream>
#include <string>
#include <vector>

#include "zlocus/cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return zlocus::cli::run(args, std::cout, std::cerr);
}
