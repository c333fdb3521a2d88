#include <iostream>

#include "tamlab/cli.hpp"

int main(int argc, char** argv) { return tamlab::cli::run(argc, argv, std::cout, std::cerr); }
