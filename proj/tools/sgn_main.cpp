#include <iostream>

#include "sgn/commands.hpp"

int main(int argc, char** argv) { return sgn::run_cli(argc, argv, std::cout, std::cerr); }
