#include <iostream>

#include "schroeder/cli.hpp"

int main(int argc, char** argv) {
    return schroeder::run_cli(argc, argv, std::cout, std::cerr);
}
