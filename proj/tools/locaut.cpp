#include <iostream>

#include "locaut/cli.hpp"

int main(int argc, char** argv) { return locaut::run({argv + 1, argv + argc}, std::cout, std::cerr); }
