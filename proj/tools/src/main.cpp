#include <iostream>

#include "sset_cli/cli.hpp"

int main(int argc, char** argv) { return sset::cli::run(argc, argv, std::cout, std::cerr); }
