#include <iostream>

#include "hdglab/cli.hpp"

int main(int argc, char **argv) { return hdglab::run_cli(argc, argv, std::cout, std::cerr); }
