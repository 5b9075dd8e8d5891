#include <iostream>

#include "mothernet/cli.hpp"

int main(int argc, char** argv) { return mothernet::cli::run(argc, argv, std::cout, std::cerr); }
