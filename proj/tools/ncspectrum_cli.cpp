#include <iostream>

#include "ncspectrum/cli.hpp"

int main(int argc, char** argv) { return ncs::cli::run(argc, argv, std::cout, std::cerr); }
