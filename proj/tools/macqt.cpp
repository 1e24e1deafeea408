#include <iostream>
#include <vector>

#include "macqt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return macqt::run_cli(args, std::cout, std::cerr);
}
