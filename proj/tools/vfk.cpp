#include <iostream>

#include "vfk/cli.hpp"

int main(int argc, char** argv) { return vfk::run_cli(argc, argv, std::cout, std::cerr); }
