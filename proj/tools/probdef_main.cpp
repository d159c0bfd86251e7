#include <iostream>

#include "probdef/cli.hpp"

int main(int argc, char** argv) { return probdef::cli::run(argc, argv, std::cout, std::cerr); }
