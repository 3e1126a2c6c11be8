#include <iostream>

#include "lh_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lhcli::run(args, std::cout, std::cerr);
}
