#include "tambara/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tambara::cli::run(argc, argv, std::cout, std::cerr); }
