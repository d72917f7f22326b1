#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return qdomain::cli::main_entry(argc, argv, std::cout, std::cerr); }
