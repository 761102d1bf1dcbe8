#include <iostream>
#include <string>
#include <vector>

#include "mlat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mlat::run(args, std::cout, std::cerr);
}
