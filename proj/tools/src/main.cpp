#include <iostream>

#include "cube/cli.hpp"

int main(int argc, char** argv) { return cube::run(argc, argv, std::cout, std::cerr); }
