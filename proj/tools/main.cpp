#include <iostream>
#include <string>
#include <vector>

#include "csamp/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return csamp::cli::run(args, std::cout, std::cerr);
}
