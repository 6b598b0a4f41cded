#include <iostream>

#include "leviform/cli.hpp"

int main(int argc, char** argv) { return leviform::run_cli(argc, argv, std::cout, std::cerr); }
