#include <iostream>

#include "outext/cli.hpp"

int main(int argc, char** argv) {
    return outext::run_cli(argc, argv, std::cout, std::cerr);
}
