#include <iostream>

#include "thetarel_cli/commands.hpp"

int main(int argc, char** argv) { return thetarel::cli::runMain(argc, argv, std::cout, std::cerr); }
