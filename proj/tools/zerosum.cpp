#include <iostream>

#include "zerosum/cli.hpp"

int main(int argc, char** argv) { return zerosum::cli::run(argc, argv, std::cout, std::cerr); }
