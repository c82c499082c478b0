#include <iostream>

#include "effcone/cli.hpp"

int main(int argc, char** argv) { return effcone::cli::run(argc, argv, std::cout, std::cerr); }
