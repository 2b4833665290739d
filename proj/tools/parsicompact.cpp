#include <iostream>

#include "parsicompact/cli.hpp"

int main(int argc, char** argv) { return parsicompact::run_cli(argc, argv, std::cout, std::cerr); }
