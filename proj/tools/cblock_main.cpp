#include "cblock/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cblock::cli::main_entry(argc, argv, std::cout, std::cerr); }
