#include <iostream>

#include "h4/cli.hpp"

int main(int argc, char** argv) { return h4::run_cli(argc, argv, std::cout, std::cerr); }
