#include <iostream>

#include "hsqm/cli.hpp"

int main(int argc, char** argv) { return hsqm::cli::main_entry(argc, argv, std::cout, std::cerr); }
