#include <iostream>

#include "gasketlab/cli.hpp"

int main(int argc, char** argv) {
    return gasketlab::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
