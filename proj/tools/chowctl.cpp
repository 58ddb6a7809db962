#include <iostream>

#include "chow/cli.hpp"

int main(int argc, char** argv) { return chow::run_cli(argc, argv, std::cout, std::cerr); }
