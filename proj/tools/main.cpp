#include <iostream>
#include <vector>

#include "dagscore/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dagscore::cli::run(args, std::cout, std::cerr);
}
