#include <iostream>

#include "hopfcyc/cli.hpp"

int main(int argc, char** argv) { return hopfcyc::cli::run(argc, argv, std::cout, std::cerr); }
