#include <iostream>

#include "symdisc/cli/commands.hpp"

int main(int argc, char** argv) { return symdisc::cli::run(argc, argv, std::cout, std::cerr); }
