#include <iostream>

#include "sympow/cli.hpp"

int main(int argc, char** argv) { return sympow::cli::run(argc, argv, std::cout, std::cerr); }
