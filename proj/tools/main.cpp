#include "hexlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hexlab::cli::run(argc, argv, std::cout, std::cerr); }
