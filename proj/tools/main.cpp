#include <iostream>

#include "mgeom/cli/commands.hpp"

int main(int argc, char** argv) { return mgeom::cli::run(argc, argv, std::cout, std::cerr); }
