#include <iostream>

#include "shortlex/cli.hpp"

int main(int argc, char** argv) { return shortlex::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
