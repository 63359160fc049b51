#include <iostream>

#include "cokernel/cli.hpp"

int main(int argc, char** argv) { return cokernel::cli::run(argc, argv, std::cout, std::cerr); }
