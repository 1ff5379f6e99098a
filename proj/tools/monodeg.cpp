#include <iostream>

#include "monodeg/cli.hpp"

int main(int argc, char** argv) { return monodeg::run_cli(argc, argv, std::cout, std::cerr); }
