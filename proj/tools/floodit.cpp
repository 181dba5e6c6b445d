#include <iostream>

#include "flood/cli.hpp"

int main(int argc, char** argv) { return flood::run_cli(argc, argv, std::cout, std::cerr); }
