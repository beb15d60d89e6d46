#include "sphconv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sphconv::run_cli(argc, argv, std::cout, std::cerr); }
