#include <iostream>

#include "ydkit/cli.hpp"

int main(int argc, char** argv) { return ydkit::run_cli(argc, argv, std::cout, std::cerr); }
