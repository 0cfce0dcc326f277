#include <iostream>

#include "bqc/cli.hpp"

int main(int argc, char **argv) { return bqc::cli::run(argc, argv, std::cout, std::cerr); }
