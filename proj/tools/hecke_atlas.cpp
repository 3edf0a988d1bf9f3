#include <iostream>

#include "hecke_atlas/cli.hpp"

int main(int argc, char** argv) { return hecke_atlas::cli::run(argc, argv, std::cout, std::cerr); }
