#include "polyloc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polyloc::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
