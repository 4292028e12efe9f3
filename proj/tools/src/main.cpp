#include "hibi/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hibi::cli::main_entry(argc, argv, std::cout, std::cerr); }
