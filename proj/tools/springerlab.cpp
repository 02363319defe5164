#include <iostream>

#include "springerlab/cli.hpp"

int main(int argc, char** argv) { return springerlab::cli::run(argc, argv, std::cout, std::cerr); }
