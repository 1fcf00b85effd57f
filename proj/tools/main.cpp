#include "ifree/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ifree::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
