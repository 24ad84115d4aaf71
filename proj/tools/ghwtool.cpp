#include <iostream>

#include "ghw/cli.hpp"

int main(int argc, char** argv) {
    return ghw::cli::run(argc, argv, std::cout, std::cerr);
}
