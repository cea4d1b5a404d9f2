#include "hexrwp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hexrwp::cli::run(argc, argv, std::cout, std::cerr); }
