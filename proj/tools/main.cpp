#include <iostream>

#include "twopoint/cli.hpp"

int main(int argc, char** argv) { return twopoint::run_cli(argc, argv, std::cout, std::cerr); }
